// The 24 Niemeier lattices: root types, glue-group structures, and explicit
// glue generators (as words in the named dual-class vectors) for the hosts
// that can receive D5+A1.
#pragma once

#include "k3fib/rootdata.hpp"

namespace k3fib {

struct GlueTerm {
  int component = 0;        // index into root_components
  std::string name;         // "alpha", "delta", "deltabar", "deltatilde", "eta6", "eta7"
  int multiplier = 1;
};
using GlueWord = std::vector<GlueTerm>;

struct NiemeierLattice {
  std::string id;
  std::vector<DynkinType> root_components;   // ordered; empty for the Leech lattice
  std::vector<GlueWord> glue_generators;     // empty for lattices without explicit data
  std::vector<Int> glue_structure;           // invariant factors of L/L_root
  bool has_explicit_glue = false;            // true for the 13 hosts used by the pipeline

  Int glue_order() const;
  std::string root_label() const;
};

struct NiemeierRealization {
  Lattice root_sum;            // block-diagonal negated Cartan gram, rank 24
  std::vector<int> offsets;    // component start indices in the root-sum basis
  std::vector<RootLattice> components;
  Overlattice over;            // the realized Niemeier lattice
  std::vector<RatVec> glue_vectors;  // glue words as vectors in root-sum coordinates
};

const std::vector<NiemeierLattice>& all_niemeier();
const NiemeierLattice& niemeier_by_id(const std::string& id);

// Lemma-1 route: orthogonal sum of the root components glued by the
// generator words.  Throws std::domain_error when the lattice carries no
// explicit glue data or a word fails isotropy.
NiemeierRealization realize(const NiemeierLattice& n);

// word -> rational vector in the root-sum basis
RatVec glue_word_vector(const NiemeierRealization& r, const GlueWord& w);

// Structural validation of one realized lattice: even, |det| = 1, rank 24,
// recomputed root decomposition equals the declared root type, glue-group
// order matches.  Returns a list of failures (empty = pass).
std::vector<std::string> validate_niemeier(const NiemeierLattice& n, int jobs = 1);

}  // namespace k3fib

// Nishiyama's method for Y2: primitive embeddings of M = D5+A1 into Niemeier
// lattices, frames W = M-perp, Mordell-Weil rank and torsion, and the 30
// fibration records of the classification.
#pragma once

#include "k3fib/niemeier.hpp"

namespace k3fib {

enum class PlacementKind { Joint, Split };

struct EmbeddingSpec {
  std::string host_id;
  PlacementKind kind = PlacementKind::Joint;
  int d5_component = 0;  // component receiving D5 (also A1 when Joint)
  int a1_component = 0;
  // canonical Prop-3 vectors for the six M basis vectors, in root-sum coords
  RatMat m_vectors;  // 6 x 24
  std::string describe() const;  // Table-1 style, e.g. "D5 < E8, A1 < D16"
};

struct Frame {
  EmbeddingSpec spec;
  NiemeierRealization host;
  Lattice N;                     // M-perp in L_root (ambient: root-sum coords)
  Lattice W;                     // M-perp in L (ambient: root-sum coords)
  RootSystemDecomposition W_root;
  std::vector<Int> wn_quotient;  // invariant factors of W/N
  std::vector<Int> torsion;      // invariant factors of Wbar_root / W_root
  int mw_rank = 0;               // 18 - rank(W_root)
};

struct FibrationRecord {
  std::string host_id;
  std::string embedding;            // Table-1 column format
  std::vector<DynkinType> fibers;   // sorted
  int mw_rank = 0;
  std::vector<Int> torsion;         // invariant factors, ascending
  std::string fibers_label() const;
  std::string torsion_label() const;
};

// All inequivalent placements of D5+A1 into the host per Prop 2/Prop 3
// eligibility, deduplicated over isomorphic components.  Empty when the host
// has no explicit glue data or admits no embedding.
std::vector<EmbeddingSpec> candidate_embeddings(const NiemeierLattice& host);

Frame compute_frame(const EmbeddingSpec& spec);

int mw_rank(const Frame& f);
std::vector<Int> mw_torsion(const Frame& f);

// The full classification: exactly 30 records in host order; throws
// std::logic_error naming the discrepancy when the count is off.
std::vector<FibrationRecord> enumerate_all(int jobs = 1);

}  // namespace k3fib

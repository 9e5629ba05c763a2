// Integral lattices with exact Gram matrices, dual/discriminant machinery,
// orthogonal complements and glue (overlattice) constructions.  Sign
// convention: definite lattices are stored negative definite, roots have
// norm -2.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3fib/matrix.hpp"

namespace k3fib {

struct DynkinType {
  char family = 'A';  // 'A', 'D', 'E'
  int n = 0;
  auto operator<=>(const DynkinType&) const = default;
  std::string str() const { return family + std::to_string(n); }
};

struct Lattice {
  int rank = 0;
  IntMat gram;                    // symmetric, rank x rank
  std::string label;
  // rows express this lattice's basis in a host lattice's basis coordinates
  std::optional<RatMat> ambient;

  bool is_even() const;
  bool is_symmetric() const;
  Int determinant() const { return det(gram); }
};

struct DiscriminantGroup {
  std::vector<Int> invariant_factors;  // d1 | d2 | ..., all > 1
  RatMat generators;                   // rows: elements of L* in L-basis coordinates
  std::vector<Rat> q_values;           // q(g) mod 2Z, canonical representative in (-2, 0]
  RatMat b_table;                      // b(g_i, g_j) mod Z, representative in (-1, 0]

  Int order() const;
};

// q mod 2Z and b mod Z with the paper's sign convention (representatives in
// (-2, 0] and (-1, 0]).
Rat q_mod2(const Rat& v);
Rat b_mod1(const Rat& v);

DiscriminantGroup discriminant_group(const Lattice& L);

// true iff the rows of `basis_in_host` span a primitive sublattice of Z^cols
bool is_primitive(const IntMat& basis_in_host);
bool is_primitive(const Lattice& S);  // uses S.ambient (integral entries required)

// Orthogonal complement of S inside L (S.ambient rows are coordinates in L's
// basis).  Result carries ambient coordinates in L and is saturated.
Lattice orthogonal_complement(const Lattice& L, const Lattice& S);

// Even overlattice of L generated by L and glue vectors (elements of L* in
// L-basis coordinates).  Throws std::domain_error naming the offending vector
// when a glue vector is not isotropic (q even, integral pairings).
struct Overlattice {
  Lattice lattice;      // gram in the new basis
  RatMat basis_in_L;    // rows: new basis in L-basis coordinates
};
Overlattice overlattice_from_glue(const Lattice& L, const std::vector<RatVec>& glue,
                                  const std::string& label = "");

// All roots (norm -2 vectors) of a negative definite lattice, in basis
// coordinates, both signs, sorted.  `jobs` <= 1 runs the serial reference.
std::vector<std::vector<Int>> roots(const Lattice& L, int jobs = 1);

struct RootComponent {
  DynkinType type;
  IntMat simple_basis;  // rows: a chosen simple-root basis, in L coordinates
};

struct RootSystemDecomposition {
  std::vector<RootComponent> components;  // sorted by (family, n)
  std::vector<DynkinType> types() const;
  int total_rank() const;
};

// Partition the root set of a negative definite lattice into irreducible
// components and identify Dynkin types (D3 reported as A3, D2 as two A1).
RootSystemDecomposition classify_roots(const Lattice& L, int jobs = 1);
RootSystemDecomposition classify_root_set(const std::vector<std::vector<Int>>& root_vecs,
                                          const IntMat& gram);

// JSON document {label, gram, ambient?} used by fixtures and `lattice info`.
std::string lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const std::string& text);

}  // namespace k3fib

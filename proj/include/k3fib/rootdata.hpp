// The A/D/E root lattices in their Bourbaki coordinate realizations, with the
// named glue vectors (alpha_l, delta_l, deltabar_l, deltatilde_l, eta6, eta7)
// as exact rational combinations of the simple roots.
#pragma once

#include "k3fib/lattice.hpp"

namespace k3fib {

struct RootLattice {
  Lattice lattice;            // gram = negated Cartan matrix
  DynkinType type;
  RatMat coords;              // rows: simple roots in the R^dim realization
  int ambient_dim = 0;
  std::map<std::string, RatVec> glue;  // name -> coefficients in the simple-root basis

  const RatVec& glue_vec(const std::string& name) const;
};

// family 'A' (n>=1), 'D' (n>=2; D2, D3 as degenerate diagram cases),
// 'E' (n in {6,7,8}).  Throws std::invalid_argument otherwise.
RootLattice make_root_lattice(char family, int n);

// Expected root count from Weyl theory: A_n -> n(n+1), D_l -> 2l(l-1),
// E6/E7/E8 -> 72/126/240.
long theoretical_root_count(DynkinType t);

}  // namespace k3fib

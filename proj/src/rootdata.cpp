#include "k3fib/rootdata.hpp"

#include <cassert>
#include <stdexcept>

namespace k3fib {

namespace {

IntMat negated_cartan(char family, int n) {
  IntMat g(n, n);
  for (int i = 0; i < n; ++i) g.at(i, i) = -2;
  auto link = [&](int i, int j) { g.at(i, j) = g.at(j, i) = 1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'D':
      // chain d1..d_{n-2}, with d_{n-1} and d_n both attached to d_{n-2}
      for (int i = 0; i + 1 < n - 2; ++i) link(i, i + 1);
      if (n >= 3) {
        link(n - 3, n - 2);
        link(n - 3, n - 1);
      }
      break;
    case 'E': {
      // bourbaki: e1-e3-e4-e5-...-en chain, e2 attached to e4
      const std::pair<int, int> chain[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
      for (auto [a, b] : chain)
        if (b < n) link(a, b);
      link(1, 3);
      break;
    }
  }
  return g;
}

}  // namespace

RootLattice make_root_lattice(char family, int n) {
  bool ok = (family == 'A' && n >= 1) || (family == 'D' && n >= 1) ||
            (family == 'E' && (n == 6 || n == 7 || n == 8));
  if (!ok) throw std::invalid_argument("make_root_lattice: invalid type " +
                                       std::string(1, family) + std::to_string(n));
  RootLattice R;
  R.type = DynkinType{family, n};

  if (family == 'D' && n == 1) {
    // degenerate: even-sum integers in R^1, i.e. 2Z with norm -4
    R.lattice.rank = 1;
    R.lattice.gram = IntMat(1, 1);
    R.lattice.gram.at(0, 0) = -4;
    R.lattice.label = "D1";
    R.ambient_dim = 1;
    R.coords = RatMat(1, 1);
    R.coords.at(0, 0) = 2;
    return R;
  }

  R.lattice.rank = n;
  R.lattice.gram = negated_cartan(family, n);
  R.lattice.label = std::string(1, family) + std::to_string(n);

  if (family == 'A') {
    R.ambient_dim = n + 1;
    R.coords = RatMat(n, n + 1);
    for (int i = 0; i < n; ++i) {
      R.coords.at(i, i) = 1;
      R.coords.at(i, i + 1) = -1;
    }
    RatVec alpha(n);
    for (int j = 1; j <= n; ++j) alpha[j - 1] = ratio(n + 1 - j, n + 1);
    R.glue["alpha"] = alpha;
  } else if (family == 'D') {
    R.ambient_dim = n;
    R.coords = RatMat(n, n);
    for (int i = 0; i + 1 < n; ++i) {
      R.coords.at(i, i) = 1;
      R.coords.at(i, i + 1) = -1;
    }
    R.coords.at(n - 1, n - 2) = 1;
    R.coords.at(n - 1, n - 1) = 1;
    RatVec delta(n), deltabar(n), deltatilde(n);
    for (int i = 1; i <= n - 2; ++i) {
      delta[i - 1] = ratio(i, 2);
      deltabar[i - 1] = 1;
      deltatilde[i - 1] = ratio(i, 2);
    }
    delta[n - 2] = ratio(n - 2, 4);
    delta[n - 1] = ratio(n, 4);
    deltabar[n - 2] = Rat(1, 2);
    deltabar[n - 1] = Rat(1, 2);
    deltatilde[n - 2] = ratio(n, 4);
    deltatilde[n - 1] = ratio(n - 2, 4);
    for (Rat& x : delta) x.canonicalize();
    for (Rat& x : deltatilde) x.canonicalize();
    R.glue["delta"] = delta;
    R.glue["deltabar"] = deltabar;
    // spec open question: deltatilde exposed for even l only; odd-l classes
    // are powers of delta
    if (n % 2 == 0) R.glue["deltatilde"] = deltatilde;
  } else {
    R.ambient_dim = 8;
    R.coords = RatMat(n, 8);
    // e1 = (eps1+eps8)/2 - (eps2+..+eps7)/2, e2 = eps1+eps2, e_i = eps_{i-1}-eps_{i-2}
    R.coords.at(0, 0) = Rat(1, 2);
    R.coords.at(0, 7) = Rat(1, 2);
    for (int c = 1; c <= 6; ++c) R.coords.at(0, c) = Rat(-1, 2);
    R.coords.at(1, 0) = 1;
    R.coords.at(1, 1) = 1;
    for (int i = 3; i <= n; ++i) {
      R.coords.at(i - 1, i - 2) = 1;
      R.coords.at(i - 1, i - 3) = -1;
    }
    if (n == 6) {
      const int c[] = {2, 3, 4, 6, 5, 4};
      RatVec eta(6);
      for (int i = 0; i < 6; ++i) eta[i] = ratio(-c[i], 3);
      for (Rat& x : eta) x.canonicalize();
      R.glue["eta6"] = eta;
    } else if (n == 7) {
      const int c[] = {2, 3, 4, 6, 5, 4, 3};
      RatVec eta(7);
      for (int i = 0; i < 7; ++i) eta[i] = ratio(-c[i], 2);
      for (Rat& x : eta) x.canonicalize();
      R.glue["eta7"] = eta;
    }
  }

  // the coordinate realization must reproduce the gram matrix
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat dotv = dot(R.coords.row(i), R.coords.row(j));
      assert(Rat(-dotv) == Rat(R.lattice.gram.at(i, j)));
    }
  return R;
}

const RatVec& RootLattice::glue_vec(const std::string& name) const {
  auto it = glue.find(name);
  if (it == glue.end())
    throw std::invalid_argument("no glue vector '" + name + "' on " + lattice.label);
  return it->second;
}

long theoretical_root_count(DynkinType t) {
  switch (t.family) {
    case 'A':
      return (long)t.n * (t.n + 1);
    case 'D':
      return 2L * t.n * (t.n - 1);
    case 'E':
      return t.n == 6 ? 72 : t.n == 7 ? 126 : 240;
  }
  return 0;
}

}  // namespace k3fib

#include "k3fib/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

#include "k3fib/enumerate.hpp"
#include "json.hpp"

namespace k3fib {

bool Lattice::is_symmetric() const {
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      if (gram.at(i, j) != gram.at(j, i)) return false;
  return true;
}

bool Lattice::is_even() const {
  for (int i = 0; i < rank; ++i)
    if (mod_floor(gram.at(i, i), 2) != 0) return false;
  return true;
}

Int DiscriminantGroup::order() const {
  Int o = 1;
  for (const Int& f : invariant_factors) o *= f;
  return o;
}

Rat q_mod2(const Rat& v) {
  Rat r = mod_rat(v, 2);
  return r == 0 ? r : Rat(r - 2);
}

Rat b_mod1(const Rat& v) {
  Rat r = mod_rat(v, 1);
  return r == 0 ? r : Rat(r - 1);
}

DiscriminantGroup discriminant_group(const Lattice& L) {
  if (det(L.gram) == 0) throw std::domain_error("discriminant_group: degenerate lattice");
  // L*/L == Z^n / G Z^n; with U G V = D the quotient generators pull back to
  // the columns of V scaled by 1/d_i.
  SmithResult s = smith_normal_form(L.gram);
  DiscriminantGroup g;
  RatMat ginv = RatMat::from_int(L.gram);
  std::vector<RatVec> gens;
  int n = L.rank;
  for (int i = 0; i < n; ++i) {
    Int d = abs(s.d.at(i, i));
    if (d <= 1) continue;
    g.invariant_factors.push_back(d);
    RatVec v(n);
    for (int r = 0; r < n; ++r) {
      v[r] = Rat(s.v.at(r, i), d);
      v[r].canonicalize();
    }
    gens.push_back(std::move(v));
  }
  // divisibility ascending
  std::sort(g.invariant_factors.begin(), g.invariant_factors.end());
  std::sort(gens.begin(), gens.end(), [&](const RatVec& a, const RatVec& b) {
    return false;  // generator order follows invariant factor order already
  });
  g.generators = RatMat((int)gens.size(), n);
  for (int i = 0; i < g.generators.rows; ++i) g.generators.set_row(i, gens[i]);
  RatMat G = RatMat::from_int(L.gram);
  g.q_values.resize(gens.size());
  g.b_table = RatMat((int)gens.size(), (int)gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    g.q_values[i] = q_mod2(bilinear(G, gens[i], gens[i]));
    for (size_t j = 0; j < gens.size(); ++j)
      g.b_table.at((int)i, (int)j) = b_mod1(bilinear(G, gens[i], gens[j]));
  }
  assert(g.order() == abs(det(L.gram)));
  return g;
}

bool is_primitive(const IntMat& basis_in_host) {
  SmithResult s = smith_normal_form(basis_in_host);
  std::vector<Int> f = s.invariant_factors();
  if ((int)f.size() != basis_in_host.rows) return false;  // not even full rank
  return std::all_of(f.begin(), f.end(), [](const Int& x) { return x == 1; });
}

bool is_primitive(const Lattice& S) {
  if (!S.ambient) throw std::invalid_argument("is_primitive: no ambient coordinates");
  IntMat m(S.ambient->rows, S.ambient->cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const Rat& x = S.ambient->at(i, j);
      if (!is_integer(x)) throw std::invalid_argument("is_primitive: non-integral coordinates");
      m.at(i, j) = num(x);
    }
  return is_primitive(m);
}

Lattice orthogonal_complement(const Lattice& L, const Lattice& S) {
  if (!S.ambient) throw std::invalid_argument("orthogonal_complement: S lacks ambient coordinates");
  RatMat G = RatMat::from_int(L.gram);
  // pairing rows: b(s_i, .) as functionals on L's basis
  RatMat rows(S.ambient->rows, L.rank);
  for (int i = 0; i < rows.rows; ++i) rows.set_row(i, mul_vec(G, S.ambient->row(i)));
  std::vector<std::vector<Int>> ker = integer_kernel(rows);
  Lattice C;
  C.rank = (int)ker.size();
  C.label = S.label.empty() ? "perp" : S.label + "^perp";
  RatMat basis(C.rank, L.rank);
  for (int i = 0; i < C.rank; ++i)
    for (int j = 0; j < L.rank; ++j) basis.at(i, j) = Rat(ker[i][j]);
  C.ambient = basis;
  C.gram = IntMat(C.rank, C.rank);
  for (int i = 0; i < C.rank; ++i)
    for (int j = 0; j < C.rank; ++j) {
      Rat v = bilinear(G, basis.row(i), basis.row(j));
      assert(is_integer(v));
      C.gram.at(i, j) = num(v);
    }
  return C;
}

Overlattice overlattice_from_glue(const Lattice& L, const std::vector<RatVec>& glue,
                                  const std::string& label) {
  RatMat G = RatMat::from_int(L.gram);
  for (size_t i = 0; i < glue.size(); ++i) {
    // must lie in the dual
    RatVec pair = mul_vec(G, glue[i]);
    for (const Rat& x : pair)
      if (!is_integer(x))
        throw std::domain_error("glue vector " + std::to_string(i) + " not in dual lattice");
    Rat q = bilinear(G, glue[i], glue[i]);
    if (!is_integer(q) || mod_floor(num(q), 2) != 0)
      throw std::domain_error("glue vector " + std::to_string(i) + " not isotropic (q = " +
                              rat_str(q) + ")");
    for (size_t j = 0; j < i; ++j) {
      Rat b = bilinear(G, glue[i], glue[j]);
      if (!is_integer(b))
        throw std::domain_error("glue vectors " + std::to_string(i) + "," + std::to_string(j) +
                                " pair non-integrally (b = " + rat_str(b) + ")");
    }
  }
  std::vector<RatVec> gens;
  for (int i = 0; i < L.rank; ++i) {
    RatVec e(L.rank);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  for (const RatVec& g : glue) gens.push_back(g);
  RatMat basis = lattice_row_basis(gens);
  assert(basis.rows == L.rank);
  Overlattice o;
  o.basis_in_L = basis;
  o.lattice.rank = L.rank;
  o.lattice.label = label.empty() ? L.label + "+glue" : label;
  o.lattice.gram = IntMat(L.rank, L.rank);
  for (int i = 0; i < L.rank; ++i)
    for (int j = 0; j < L.rank; ++j) {
      Rat v = bilinear(G, basis.row(i), basis.row(j));
      assert(is_integer(v));
      o.lattice.gram.at(i, j) = num(v);
    }
  assert(o.lattice.is_even());
  return o;
}

std::vector<std::vector<Int>> roots(const Lattice& L, int jobs) {
  IntMat neg(L.rank, L.rank);
  for (int i = 0; i < L.rank; ++i)
    for (int j = 0; j < L.rank; ++j) neg.at(i, j) = -L.gram.at(i, j);
  // positive definiteness of -gram is checked by the enumerator's Cholesky
  return short_vectors(neg, Int(2), jobs);
}

std::vector<DynkinType> RootSystemDecomposition::types() const {
  std::vector<DynkinType> t;
  for (const auto& c : components) t.push_back(c.type);
  return t;
}

int RootSystemDecomposition::total_rank() const {
  int r = 0;
  for (const auto& c : components) r += c.type.n;
  return r;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

DynkinType identify(const std::vector<std::vector<Int>>& simple, const IntMat& gram) {
  int k = (int)simple.size();
  RatMat G = RatMat::from_int(gram);
  auto pairing = [&](int i, int j) {
    RatVec a(simple[i].begin(), simple[i].end()), b(simple[j].begin(), simple[j].end());
    return bilinear(G, a, b);
  };
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (pairing(i, j) != 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  int fork = -1;
  for (int i = 0; i < k; ++i) {
    if ((int)adj[i].size() > 3) throw std::logic_error("root basis with degree > 3 node");
    if ((int)adj[i].size() == 3) {
      if (fork >= 0) throw std::logic_error("root basis with two fork nodes");
      fork = i;
    }
  }
  if (fork < 0) return DynkinType{'A', k};
  std::vector<int> lens;
  for (int s : adj[fork]) {
    int len = 1, prev = fork, cur = s;
    while (true) {
      int next = -1;
      for (int t : adj[cur])
        if (t != prev) next = t;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  if (lens[0] == 1 && lens[1] == 1) return DynkinType{'D', k};
  if (lens == std::vector<int>{1, 2, 2}) return DynkinType{'E', 6};
  if (lens == std::vector<int>{1, 2, 3}) return DynkinType{'E', 7};
  if (lens == std::vector<int>{1, 2, 4}) return DynkinType{'E', 8};
  throw std::logic_error("unrecognized Dynkin diagram shape");
}

}  // namespace

RootSystemDecomposition classify_root_set(const std::vector<std::vector<Int>>& root_vecs,
                                          const IntMat& gram) {
  RootSystemDecomposition out;
  int m = (int)root_vecs.size();
  if (m == 0) return out;
  int n = gram.rows;
  RatMat G = RatMat::from_int(gram);
  // precompute gram * root for fast pairings
  std::vector<RatVec> gr(m);
  for (int i = 0; i < m; ++i) {
    RatVec v(root_vecs[i].begin(), root_vecs[i].end());
    gr[i] = mul_vec(G, v);
  }
  auto pair_with = [&](int i, const std::vector<Int>& w) {
    Rat s;
    for (int t = 0; t < n; ++t)
      if (w[t] != 0 && gr[i][t] != 0) s += gr[i][t] * Rat(w[t]);
    return s;
  };
  UnionFind uf(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (pair_with(i, root_vecs[j]) != 0) uf.unite(i, j);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < m; ++i) groups[uf.find(i)].push_back(i);

  for (auto& [key, idx] : groups) {
    // positive half: first nonzero coordinate positive
    std::set<std::vector<Int>> pos;
    for (int i : idx) {
      const auto& r = root_vecs[i];
      for (const Int& x : r) {
        if (x == 0) continue;
        if (x > 0) pos.insert(r);
        break;
      }
    }
    // simple roots: positive roots that are not sums of two positive roots
    std::vector<std::vector<Int>> simple;
    for (const auto& r : pos) {
      bool is_sum = false;
      for (const auto& s : pos) {
        if (s == r) continue;
        std::vector<Int> t(n);
        for (int c = 0; c < n; ++c) t[c] = r[c] - s[c];
        if (pos.count(t)) {
          is_sum = true;
          break;
        }
      }
      if (!is_sum) simple.push_back(r);
    }
    RootComponent comp;
    comp.type = identify(simple, gram);
    if (comp.type == DynkinType{'D', 3}) comp.type = DynkinType{'A', 3};
    // D2 cannot appear: disconnected diagrams split into separate components
    comp.simple_basis = IntMat((int)simple.size(), n);
    for (int i = 0; i < comp.simple_basis.rows; ++i)
      for (int j = 0; j < n; ++j) comp.simple_basis.at(i, j) = simple[i][j];
    out.components.push_back(std::move(comp));
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const RootComponent& a, const RootComponent& b) {
              if (a.type != b.type) return a.type < b.type;
              return a.simple_basis.a < b.simple_basis.a;
            });
  return out;
}

RootSystemDecomposition classify_roots(const Lattice& L, int jobs) {
  return classify_root_set(roots(L, jobs), L.gram);
}

std::string lattice_to_json(const Lattice& L) {
  nlohmann::json j;
  j["label"] = L.label;
  auto& g = j["gram"] = nlohmann::json::array();
  for (int i = 0; i < L.rank; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < L.rank; ++c) row.push_back(L.gram.at(i, c).get_str());
    g.push_back(row);
  }
  if (L.ambient) {
    auto& a = j["ambient"] = nlohmann::json::array();
    for (int i = 0; i < L.ambient->rows; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < L.ambient->cols; ++c) row.push_back(rat_str(L.ambient->at(i, c)));
      a.push_back(row);
    }
  }
  return j.dump(2);
}

Lattice lattice_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Lattice L;
  L.label = j.value("label", "");
  const auto& g = j.at("gram");
  L.rank = (int)g.size();
  L.gram = IntMat(L.rank, L.rank);
  for (int i = 0; i < L.rank; ++i) {
    if ((int)g[i].size() != L.rank) throw std::invalid_argument("gram not square");
    for (int c = 0; c < L.rank; ++c) L.gram.at(i, c) = Int(g[i][c].get<std::string>());
  }
  if (j.contains("ambient")) {
    const auto& a = j["ambient"];
    RatMat m((int)a.size(), (int)a[0].size());
    for (int i = 0; i < m.rows; ++i)
      for (int c = 0; c < m.cols; ++c) m.at(i, c) = parse_rat(a[i][c].get<std::string>());
    L.ambient = m;
  }
  if (!L.is_symmetric()) throw std::invalid_argument("gram not symmetric");
  return L;
}

}  // namespace k3fib

#include "k3fib/niemeier.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace k3fib {

Int NiemeierLattice::glue_order() const {
  Int o = 1;
  for (const Int& f : glue_structure) o *= f;
  return o;
}

std::string NiemeierLattice::root_label() const {
  if (root_components.empty()) return "Leech";
  std::ostringstream os;
  for (size_t i = 0; i < root_components.size(); ++i) {
    if (i) os << " ";
    os << root_components[i].str();
  }
  return os.str();
}

namespace {

using W = GlueWord;
using T = GlueTerm;

std::vector<NiemeierLattice> build_table() {
  std::vector<NiemeierLattice> v;
  auto add = [&](std::string id, std::vector<DynkinType> comps, std::vector<GlueWord> words,
                 std::vector<long> structure, bool explicit_glue) {
    NiemeierLattice n;
    n.id = std::move(id);
    n.root_components = std::move(comps);
    n.glue_generators = std::move(words);
    for (long s : structure) n.glue_structure.push_back(Int(s));
    n.has_explicit_glue = explicit_glue;
    v.push_back(std::move(n));
  };
  DynkinType E8{'E', 8}, E7{'E', 7}, E6{'E', 6};
  auto D = [](int n) { return DynkinType{'D', n}; };
  auto A = [](int n) { return DynkinType{'A', n}; };

  // the 13 hosts of the pipeline carry explicit generators (Prop 2's list
  // plus D24 and D12^2, which Table 1 uses as well)
  add("E8^3", {E8, E8, E8}, {}, {}, true);
  add("E8+D16", {E8, D(16)}, {W{T{1, "delta", 1}}}, {2}, true);
  add("E7^2+D10", {E7, E7, D(10)},
      {W{T{0, "eta7", 1}, T{2, "delta", 1}}, W{T{1, "eta7", 1}, T{2, "deltatilde", 1}}},
      {2, 2}, true);
  add("E7+A17", {E7, A(17)}, {W{T{0, "eta7", 1}, T{1, "alpha", 3}}}, {6}, true);
  add("D24", {D(24)}, {W{T{0, "delta", 1}}}, {2}, true);
  add("D12^2", {D(12), D(12)},
      {W{T{0, "delta", 1}, T{1, "deltabar", 1}}, W{T{0, "deltabar", 1}, T{1, "delta", 1}}},
      {2, 2}, true);
  add("D8^3", {D(8), D(8), D(8)},
      {W{T{0, "delta", 1}, T{1, "deltabar", 1}, T{2, "deltabar", 1}},
       W{T{0, "deltabar", 1}, T{1, "delta", 1}, T{2, "deltabar", 1}},
       W{T{0, "deltabar", 1}, T{1, "deltabar", 1}, T{2, "delta", 1}}},
      {2, 2, 2}, true);
  add("D9+A15", {D(9), A(15)}, {W{T{0, "delta", 1}, T{1, "alpha", 2}}}, {8}, true);
  add("E6^4", {E6, E6, E6, E6},
      {W{T{0, "eta6", 1}, T{1, "eta6", 1}, T{2, "eta6", 1}},
       W{T{0, "eta6", 2}, T{2, "eta6", 1}, T{3, "eta6", 1}}},
      {3, 3}, true);
  add("A11+E6+D7", {A(11), E6, D(7)},
      {W{T{0, "alpha", 1}, T{1, "eta6", 1}, T{2, "delta", 1}}}, {12}, true);
  add("D6^4", {D(6), D(6), D(6), D(6)},
      {W{T{0, "deltabar", 1}, T{1, "delta", 1}, T{2, "delta", 1}},
       W{T{1, "deltabar", 1}, T{2, "delta", 1}, T{3, "delta", 1}},
       W{T{0, "delta", 1}, T{2, "deltabar", 1}, T{3, "delta", 1}},
       W{T{0, "deltabar", 1}, T{1, "deltabar", 1}, T{2, "deltabar", 1}, T{3, "deltabar", 1}}},
      {2, 2, 2, 2}, true);
  add("D6+A9^2", {D(6), A(9), A(9)},
      {W{T{0, "delta", 1}, T{2, "alpha", 5}},
       W{T{0, "deltatilde", 1}, T{1, "alpha", 1}, T{2, "alpha", 2}}},
      {2, 10}, true);
  add("D5^2+A7^2", {D(5), D(5), A(7), A(7)},
      {W{T{0, "delta", 1}, T{1, "delta", 1}, T{2, "alpha", 2}},
       W{T{0, "delta", 3}, T{1, "delta", 2}, T{2, "alpha", 1}, T{3, "alpha", 1}}},
      {4, 8}, true);

  // remaining lattices: root type and glue structure only
  add("A8^3", {A(8), A(8), A(8)}, {}, {3, 9}, false);
  add("A24", {A(24)}, {}, {5}, false);
  add("A12^2", {A(12), A(12)}, {}, {13}, false);
  add("D4^6", {D(4), D(4), D(4), D(4), D(4), D(4)}, {}, {2, 2, 2, 2, 2, 2}, false);
  add("D4+A5^4", {D(4), A(5), A(5), A(5), A(5)}, {}, {2, 6, 6}, false);
  add("A6^4", {A(6), A(6), A(6), A(6)}, {}, {7, 7}, false);
  add("A4^6", {A(4), A(4), A(4), A(4), A(4), A(4)}, {}, {5, 5, 5}, false);
  add("A3^8", {A(3), A(3), A(3), A(3), A(3), A(3), A(3), A(3)}, {}, {4, 4, 4, 4}, false);
  add("A2^12", std::vector<DynkinType>(12, A(2)), {}, {3, 3, 3, 3, 3, 3}, false);
  add("A1^24", std::vector<DynkinType>(24, A(1)), {}, std::vector<long>(12, 2), false);
  add("Leech", {}, {}, {}, false);
  return v;
}

}  // namespace

const std::vector<NiemeierLattice>& all_niemeier() {
  static const std::vector<NiemeierLattice> table = build_table();
  return table;
}

const NiemeierLattice& niemeier_by_id(const std::string& id) {
  for (const auto& n : all_niemeier())
    if (n.id == id) return n;
  throw std::invalid_argument("unknown Niemeier lattice: " + id);
}

RatVec glue_word_vector(const NiemeierRealization& r, const GlueWord& w) {
  RatVec v(r.root_sum.rank);
  for (const GlueTerm& t : w) {
    const RootLattice& c = r.components.at(t.component);
    const RatVec& g = c.glue_vec(t.name);
    int off = r.offsets.at(t.component);
    for (int i = 0; i < (int)g.size(); ++i) v[off + i] += Rat(t.multiplier) * g[i];
  }
  return v;
}

NiemeierRealization realize(const NiemeierLattice& n) {
  if (!n.has_explicit_glue)
    throw std::domain_error("glue data unavailable for " + n.id);
  NiemeierRealization r;
  int rank = 0;
  for (DynkinType t : n.root_components) {
    r.offsets.push_back(rank);
    r.components.push_back(make_root_lattice(t.family, t.n));
    rank += t.n;
  }
  assert(rank == 24);
  r.root_sum.rank = rank;
  r.root_sum.label = n.id + "_root";
  r.root_sum.gram = IntMat(rank, rank);
  for (size_t c = 0; c < r.components.size(); ++c) {
    const IntMat& g = r.components[c].lattice.gram;
    int off = r.offsets[c];
    for (int i = 0; i < g.rows; ++i)
      for (int j = 0; j < g.cols; ++j) r.root_sum.gram.at(off + i, off + j) = g.at(i, j);
  }
  for (const GlueWord& w : n.glue_generators) r.glue_vectors.push_back(glue_word_vector(r, w));
  r.over = overlattice_from_glue(r.root_sum, r.glue_vectors, n.id);
  Int d = abs(det(r.over.lattice.gram));
  if (d != 1)
    throw std::domain_error("realized " + n.id + " has |det| = " + d.get_str() + ", want 1");
  return r;
}

std::vector<std::string> validate_niemeier(const NiemeierLattice& n, int jobs) {
  std::vector<std::string> fails;
  NiemeierRealization r;
  try {
    r = realize(n);
  } catch (const std::exception& e) {
    fails.push_back(std::string("realize: ") + e.what());
    return fails;
  }
  if (!r.over.lattice.is_even()) fails.push_back("not even");
  if (abs(det(r.over.lattice.gram)) != 1) fails.push_back("not unimodular");
  if (r.over.lattice.rank != 24) fails.push_back("rank != 24");
  // glue-group order: [L : L_root] = sqrt(|det root gram|)
  Int idx2 = abs(det(r.root_sum.gram));
  if (n.glue_order() * n.glue_order() != idx2)
    fails.push_back("glue order " + n.glue_order().get_str() + " does not square to root det " +
                    idx2.get_str());
  RootSystemDecomposition dec = classify_roots(r.over.lattice, jobs);
  std::vector<DynkinType> got = dec.types();
  std::vector<DynkinType> want = n.root_components;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) {
    std::string s = "root decomposition mismatch: got {";
    for (auto t : got) s += t.str() + " ";
    s += "} want {";
    for (auto t : want) s += t.str() + " ";
    s += "}";
    fails.push_back(s);
  }
  return fails;
}

}  // namespace k3fib

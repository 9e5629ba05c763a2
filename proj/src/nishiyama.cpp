#include "k3fib/nishiyama.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3fib {

namespace {

// canonical Prop-3 vectors inside one component, as indices of simple roots
// (order chosen so the joint gram equals Gram(D5) + Gram(A1) blockwise)
std::vector<int> d5_indices(DynkinType t) {
  if (t.family == 'D') {
    assert(t.n >= 5);
    // (d_{l-4}, d_{l-3}, d_{l-2}, d_{l-1}, d_l), 0-based
    return {t.n - 5, t.n - 4, t.n - 3, t.n - 2, t.n - 1};
  }
  assert(t.family == 'E');
  // (e1, e3, e4, e5, e2)
  return {0, 2, 3, 4, 1};
}

int a1_index(DynkinType t, bool joint) {
  if (joint) return t.family == 'D' ? t.n - 7 : 6;  // d_{l-6} / e7
  switch (t.family) {
    case 'A':
      return t.n - 1;  // a_n
    case 'D':
      return t.n - 1;  // d_l
    default:
      return 0;  // e1
  }
}

bool d5_fits(DynkinType t) {
  return (t.family == 'D' && t.n >= 5) || t.family == 'E';
}

bool joint_fits(DynkinType t) {
  return (t.family == 'D' && t.n >= 7) || (t.family == 'E' && t.n >= 7);
}

RatMat lift_m_vectors(const NiemeierRealization& host, int d5_comp,
                      const std::vector<int>& d5_idx, int a1_comp, int a1_idx) {
  RatMat m(6, host.root_sum.rank);
  for (int k = 0; k < 5; ++k) m.at(k, host.offsets[d5_comp] + d5_idx[k]) = 1;
  m.at(5, host.offsets[a1_comp] + a1_idx) = 1;
  return m;
}

IntMat expected_m_gram() {
  // Gram(D5) + Gram(A1) in the order fixed by d5_indices
  IntMat g(6, 6);
  for (int i = 0; i < 6; ++i) g.at(i, i) = -2;
  auto link = [&](int i, int j) { g.at(i, j) = g.at(j, i) = 1; };
  link(0, 1);
  link(1, 2);
  link(2, 3);
  link(2, 4);
  return g;
}

}  // namespace

std::string EmbeddingSpec::describe() const {
  const NiemeierLattice& host = niemeier_by_id(host_id);
  auto comp = [&](int i) { return host.root_components[i].str(); };
  std::ostringstream os;
  if (kind == PlacementKind::Joint)
    os << "D5+A1 < " << comp(d5_component);
  else
    os << "D5 < " << comp(d5_component) << ", A1 < " << comp(a1_component);
  return os.str();
}

std::vector<EmbeddingSpec> candidate_embeddings(const NiemeierLattice& host) {
  std::vector<EmbeddingSpec> specs;
  if (!host.has_explicit_glue || host.root_components.empty()) return specs;
  NiemeierRealization real = realize(host);
  std::set<std::tuple<int, DynkinType>> joint_seen;
  std::set<std::tuple<DynkinType, DynkinType>> split_seen;

  for (int ci = 0; ci < (int)host.root_components.size(); ++ci) {
    DynkinType t = host.root_components[ci];
    if (!joint_fits(t)) continue;
    if (!joint_seen.insert({0, t}).second) continue;  // one per component type
    EmbeddingSpec s;
    s.host_id = host.id;
    s.kind = PlacementKind::Joint;
    s.d5_component = s.a1_component = ci;
    s.m_vectors = lift_m_vectors(real, ci, d5_indices(t), ci, a1_index(t, true));
    specs.push_back(std::move(s));
  }
  for (int ci = 0; ci < (int)host.root_components.size(); ++ci) {
    DynkinType td = host.root_components[ci];
    if (!d5_fits(td)) continue;
    for (int cj = 0; cj < (int)host.root_components.size(); ++cj) {
      if (cj == ci) continue;  // same-component split is the joint placement
      DynkinType ta = host.root_components[cj];
      if (!split_seen.insert({td, ta}).second) continue;
      EmbeddingSpec s;
      s.host_id = host.id;
      s.kind = PlacementKind::Split;
      s.d5_component = ci;
      s.a1_component = cj;
      s.m_vectors = lift_m_vectors(real, ci, d5_indices(td), cj, a1_index(ta, false));
      specs.push_back(std::move(s));
    }
  }
  // verify gram + primitivity of every spec before handing it out
  IntMat want = expected_m_gram();
  RatMat G = RatMat::from_int(real.root_sum.gram);
  for (const EmbeddingSpec& s : specs) {
    IntMat mi(6, real.root_sum.rank);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < real.root_sum.rank; ++j) {
        assert(is_integer(s.m_vectors.at(i, j)));
        mi.at(i, j) = num(s.m_vectors.at(i, j));
      }
    if (!is_primitive(mi)) throw std::logic_error("non-primitive canonical embedding in " + host.id);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        Rat b = bilinear(G, s.m_vectors.row(i), s.m_vectors.row(j));
        if (b != Rat(want.at(i, j)))
          throw std::logic_error("embedded gram mismatch in " + host.id);
      }
  }
  return specs;
}

Frame compute_frame(const EmbeddingSpec& spec) {
  Frame f;
  f.spec = spec;
  f.host = realize(niemeier_by_id(spec.host_id));
  const Lattice& Lroot = f.host.root_sum;
  int n = Lroot.rank;
  RatMat G = RatMat::from_int(Lroot.gram);

  // N = M-perp in L_root
  RatMat pair_rows(6, n);
  for (int i = 0; i < 6; ++i) pair_rows.set_row(i, mul_vec(G, spec.m_vectors.row(i)));
  std::vector<std::vector<Int>> nbasis = integer_kernel(pair_rows);
  assert((int)nbasis.size() == n - 6);

  // pairings of the standard root basis with M, as an integral system
  IntMat P(n, 6);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 6; ++j) {
      Rat b = pair_rows.at(j, i);
      assert(is_integer(b));
      P.at(i, j) = num(b);
    }

  // W/N: glue classes admitting a representative orthogonal to M.
  // Enumerate the glue group, keep classes g with b(g, m_j) in the image of
  // the integral pairing L_root -> M*, and store the orthogonalized reps.
  std::vector<int> orders;
  for (const RatVec& g : f.host.glue_vectors) {
    int m = 1;
    auto integral = [&](int k) {
      for (const Rat& x : g)
        if (!is_integer(Rat(k) * x)) return false;
      return true;
    };
    while (!integral(m)) ++m;
    orders.push_back(m);
  }
  std::vector<RatVec> w_gens;
  for (const std::vector<Int>& row : nbasis) w_gens.emplace_back(row.begin(), row.end());
  std::set<std::vector<Rat>> seen_classes;
  std::vector<RatVec> orth_reps;
  long combos = 1;
  for (int m : orders) combos *= m;
  long in_w = 0;
  for (long code = 0; code < combos; ++code) {
    RatVec v(n);
    long c = code;
    for (size_t gi = 0; gi < orders.size(); ++gi) {
      int coeff = int(c % orders[gi]);
      c /= orders[gi];
      if (coeff)
        for (int t = 0; t < n; ++t) v[t] += Rat(coeff) * f.host.glue_vectors[gi][t];
    }
    std::vector<Rat> frac(n);
    for (int t = 0; t < n; ++t) frac[t] = mod_rat(v[t], 1);
    if (!seen_classes.insert(frac).second) continue;
    std::vector<Int> target(6);
    bool integral_target = true;
    for (int j = 0; j < 6; ++j) {
      Rat b = bilinear(G, v, spec.m_vectors.row(j));
      if (!is_integer(b)) { integral_target = false; break; }
      target[j] = num(b);
    }
    if (!integral_target) continue;
    auto sol = solve_integer_combination(P, target);
    if (!sol) continue;
    ++in_w;
    bool trivial = std::all_of(frac.begin(), frac.end(), [](const Rat& x) { return x == 0; });
    if (trivial) continue;
    RatVec rep(n);
    for (int t = 0; t < n; ++t) rep[t] = v[t] - Rat((*sol)[t]);
    for (int j = 0; j < 6; ++j) assert(bilinear(G, rep, spec.m_vectors.row(j)) == 0);
    orth_reps.push_back(std::move(rep));
  }

  // assemble N and W
  auto make_sub = [&](const std::vector<RatVec>& gens, const std::string& label) {
    RatMat basis = lattice_row_basis(gens);
    Lattice L;
    L.rank = basis.rows;
    L.label = label;
    L.ambient = basis;
    L.gram = IntMat(L.rank, L.rank);
    for (int i = 0; i < L.rank; ++i)
      for (int j = 0; j < L.rank; ++j) {
        Rat b = bilinear(G, basis.row(i), basis.row(j));
        assert(is_integer(b));
        L.gram.at(i, j) = num(b);
      }
    return L;
  };
  f.N = make_sub(w_gens, spec.host_id + " N");
  std::vector<RatVec> all_w = w_gens;
  for (const RatVec& r : orth_reps) all_w.push_back(r);
  f.W = make_sub(all_w, spec.host_id + " W");
  assert(f.W.rank == 18);
  assert(abs(det(f.W.gram)) == 8);

  // W/N structure from coordinates of W's basis over N's basis
  {
    Int dN = abs(det(f.N.gram));
    Int dW = abs(det(f.W.gram));
    Int idx2 = dN / dW;
    // coordinates of N's basis in W's basis are integral; quotient = SNF
    IntMat rel(f.N.rank, f.W.rank);
    for (int i = 0; i < f.N.rank; ++i) {
      RatVec c = express_in_basis(f.N.ambient->row(i), *f.W.ambient);
      for (int j = 0; j < f.W.rank; ++j) {
        assert(is_integer(c[j]));
        rel.at(i, j) = num(c[j]);
      }
    }
    for (const Int& d : smith_normal_form(rel).invariant_factors())
      if (d > 1) f.wn_quotient.push_back(d);
    Int check = 1;
    for (const Int& d : f.wn_quotient) check *= d;
    assert(check * check == idx2);
    (void)in_w;
  }

  // W_root: host roots orthogonal to M (roots of L all lie in single
  // components, so enumerate componentwise)
  std::vector<std::vector<Int>> wroot_vecs;
  for (size_t c = 0; c < f.host.components.size(); ++c) {
    const RootLattice& comp = f.host.components[c];
    int off = f.host.offsets[c];
    Lattice neg = comp.lattice;
    for (auto r : roots(neg, 1)) {
      RatVec v(n);
      for (int i = 0; i < comp.lattice.rank; ++i) v[off + i] = Rat(r[i]);
      bool orth = true;
      for (int j = 0; j < 6 && orth; ++j)
        if (bilinear(G, v, spec.m_vectors.row(j)) != 0) orth = false;
      if (!orth) continue;
      std::vector<Int> w(n);
      for (int i = 0; i < comp.lattice.rank; ++i) w[off + i] = r[i];
      wroot_vecs.push_back(std::move(w));
    }
  }
  f.W_root = classify_root_set(wroot_vecs, Lroot.gram);
  f.mw_rank = 18 - f.W_root.total_rank();

  // torsion = saturation of W_root inside W, modulo W_root
  if (wroot_vecs.empty()) {
    f.torsion = {};
  } else {
    std::vector<RatVec> rr;
    for (const auto& w : wroot_vecs) rr.emplace_back(w.begin(), w.end());
    RatMat wr_basis = lattice_row_basis(rr);  // basis of the W_root lattice
    // coordinates in W's basis
    std::vector<RatVec> coords;
    for (int i = 0; i < wr_basis.rows; ++i)
      coords.push_back(express_in_basis(wr_basis.row(i), *f.W.ambient));
    std::vector<std::vector<Int>> sat = saturate(coords, f.W.rank);
    RatMat sat_basis((int)sat.size(), f.W.rank);
    for (int i = 0; i < sat_basis.rows; ++i)
      for (int j = 0; j < f.W.rank; ++j) sat_basis.at(i, j) = Rat(sat[i][j]);
    IntMat rel(wr_basis.rows, sat_basis.rows);
    for (int i = 0; i < wr_basis.rows; ++i) {
      RatVec c = express_in_basis(coords[i], sat_basis);
      for (int j = 0; j < sat_basis.rows; ++j) {
        assert(is_integer(c[j]));
        rel.at(i, j) = num(c[j]);
      }
    }
    for (const Int& d : smith_normal_form(rel).invariant_factors())
      if (d > 1) f.torsion.push_back(d);
  }
  std::sort(f.torsion.begin(), f.torsion.end());
  return f;
}

int mw_rank(const Frame& f) { return f.mw_rank; }
std::vector<Int> mw_torsion(const Frame& f) { return f.torsion; }

std::string FibrationRecord::fibers_label() const {
  std::ostringstream os;
  for (size_t i = 0; i < fibers.size(); ++i) {
    if (i) os << " ";
    os << fibers[i].str();
  }
  return os.str();
}

std::string FibrationRecord::torsion_label() const {
  if (torsion.empty()) return "(0)";
  std::ostringstream os;
  for (size_t i = 0; i < torsion.size(); ++i) {
    if (i) os << "x";
    os << "Z/" << torsion[i].get_str();
  }
  return os.str();
}

std::vector<FibrationRecord> enumerate_all(int jobs) {
  // hosts in the paper's table order
  std::vector<std::pair<std::string, EmbeddingSpec>> work;
  for (const NiemeierLattice& host : all_niemeier()) {
    if (!host.has_explicit_glue) continue;
    for (EmbeddingSpec& s : candidate_embeddings(host)) work.emplace_back(host.id, std::move(s));
  }
  std::vector<FibrationRecord> records(work.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
#endif
  for (long i = 0; i < (long)work.size(); ++i) {
    Frame f = compute_frame(work[i].second);
    FibrationRecord r;
    r.host_id = work[i].first;
    r.embedding = work[i].second.describe();
    r.fibers = f.W_root.types();
    std::sort(r.fibers.begin(), r.fibers.end());
    r.mw_rank = f.mw_rank;
    r.torsion = f.torsion;
    records[i] = std::move(r);
  }
  if (records.size() != 30) {
    std::ostringstream os;
    os << "expected 30 fibration records, got " << records.size() << ":";
    for (const auto& r : records) os << "\n  " << r.host_id << " | " << r.embedding;
    throw std::logic_error(os.str());
  }
  return records;
}

}  // namespace k3fib

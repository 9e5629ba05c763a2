#include "k3fib/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3fib {

bool EntryReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass && !c.skipped) return false;
  return true;
}

const FibrationRecord* match_table1(const std::vector<FibrationRecord>& records,
                                    const std::vector<DynkinType>& fibers, int rank,
                                    const std::vector<Int>& torsion, std::string* err) {
  const FibrationRecord* found = nullptr;
  for (const auto& r : records) {
    if (r.fibers != fibers || r.mw_rank != rank || r.torsion != torsion) continue;
    if (found) {
      if (err) *err = "multiple classification rows match";
      return nullptr;
    }
    found = &r;
  }
  if (!found && err) *err = "no classification row matches";
  return found;
}

namespace {

std::string fibers_str(const SurfaceAnalysis& S) {
  std::ostringstream os;
  for (size_t i = 0; i < S.fibers.size(); ++i) {
    if (i) os << " ";
    os << S.fibers[i].fiber.label() << "@" << S.fibers[i].place.str();
  }
  return os.str();
}

Rat fiber_root_det(const KodairaFiber& f) {
  // |det| of the fiber's root lattice contribution
  if (!f.has_root_type()) return Rat(1);
  DynkinType t = f.root_type();
  switch (t.family) {
    case 'A': return Rat(t.n + 1);
    case 'D': return Rat(4);
    default: return Rat(t.n == 6 ? 3 : t.n == 7 ? 2 : 1);
  }
}

}  // namespace

CheckResult spot_check_parametrization(const CatalogEntry& e) {
  CheckResult r{"parametrization", false, false, ""};
  if (!e.maps) {
    r.skipped = true;
    r.detail = "no maps recorded for this entry";
    return r;
  }
  if (e.points.empty()) {
    r.skipped = true;
    r.detail = "no exact point available";
    return r;
  }
  const Rat samples[] = {Rat(2), Rat(3), Rat(5), Rat(7), Rat(-3), Rat(1, 2)};
  std::string last_reason = "every sample degenerated";
  // sections lying in the maps' exceptional locus (y = 0 torsion, say) are
  // skipped; negations and small sums usually provide a usable section
  std::vector<SectionPoint> candidates;
  for (const CatalogPoint& cp : e.points) candidates.push_back(cp.point);
  size_t base = candidates.size();
  for (size_t i = 0; i < base; ++i) candidates.push_back(negate(e.model, candidates[i]));
  for (size_t i = 0; i < base; ++i)
    for (size_t j = i; j < base; ++j) {
      candidates.push_back(add(e.model, candidates[i], candidates[j]));
      if (i != j) candidates.push_back(add(e.model, candidates[i], negate(e.model, candidates[j])));
    }
  for (size_t i = 0; i < base; ++i) candidates.push_back(multiple(e.model, 3, candidates[i]));
  for (const SectionPoint& sp : candidates) {
    if (sp.infinity) continue;
    CatalogPoint cp;
    cp.point = sp;
    for (const Rat& pv : samples) {
      try {
        Rat xv = cp.point.x.eval(pv);
        Rat yv = cp.point.y.eval(pv);
        if (e.maps->raw_coords) {
          // transport from the normalized model back to the printed one
          Rat uv = e.u_scale ? e.u_scale->eval(pv) : Rat(1);
          if (uv == 0) continue;
          xv = xv / (uv * uv);
          yv = yv / (uv * uv * uv);
        }
        Rat X = eval_map_expr(e.maps->X, xv, yv, pv);
        Rat Y = eval_map_expr(e.maps->Y, xv, yv, pv);
        Rat Z = eval_map_expr(e.maps->Z, xv, yv, pv);
        if (X == 0 || Y == 0 || Z == 0) continue;
        Rat surf = X + 1 / X + Y + 1 / Y + Z + 1 / Z - Rat(2);
        surf.canonicalize();
        if (surf == 0) {
          std::ostringstream os;
          os << "sample " << e.parameter << " = " << rat_str(pv) << " maps to (X,Y,Z) = ("
             << rat_str(X) << ", " << rat_str(Y) << ", " << rat_str(Z) << ")";
          r.pass = true;
          r.detail = os.str();
          return r;
        }
        r.detail = "surface identity violated at " + e.parameter + " = " + rat_str(pv) +
                   ": residue " + rat_str(surf);
        return r;
      } catch (const std::exception& ex) {
        last_reason = ex.what();
        continue;  // degenerate sample (pole / zero denominator): try the next
      }
    }
  }
  r.skipped = true;
  r.detail = last_reason;
  return r;
}

EntryReport verify_entry(const CatalogEntry& e, const std::vector<FibrationRecord>& table1) {
  EntryReport rep;
  rep.id = e.id;
  rep.letter = e.letter;
  auto push = [&](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back(CheckResult{std::move(name), pass, false, std::move(detail)});
  };

  // normalization audit: the stored polynomial model must be the cleared
  // form of the printed one
  if (e.raw) {
    RatFunc u;
    try {
      Model n = normalize(*e.raw, &u);
      bool same = n.a1 == e.model.a1 && n.a2 == e.model.a2 && n.a3 == e.model.a3 &&
                  n.a4 == e.model.a4 && n.a6 == e.model.a6;
      bool u_ok = !e.u_scale || (u.is_poly() && u.as_poly() == *e.u_scale);
      push("normalization", same && u_ok,
           same ? "raw form clears to the stored model (u = " + u.str(e.parameter) + ")"
                : "cleared model differs from the stored one");
    } catch (const std::exception& ex) {
      push("normalization", false, ex.what());
    }
  }

  SurfaceAnalysis S;
  try {
    S = analyze_surface(e.model);
  } catch (const std::exception& ex) {
    push("tate", false, ex.what());
    return rep;
  }
  rep.computed_fibers = fibers_str(S);
  push("euler", S.euler_sum == 24, "sum " + std::to_string(S.euler_sum));

  // fiber multiset (type @ place) against the catalog expectation
  {
    std::multiset<std::string> got, want;
    for (const auto& f : S.fibers) got.insert(f.fiber.label() + "@" + f.place.str());
    for (const auto& f : e.expected_fibers) want.insert(f.type_label + "@" + f.place.str());
    push("fibers", got == want,
         got == want ? rep.computed_fibers : "computed: " + rep.computed_fibers);
  }

  // reducible root types
  std::vector<DynkinType> roots;
  for (const auto& f : S.fibers)
    if (f.fiber.has_root_type()) roots.push_back(f.fiber.root_type());
  std::sort(roots.begin(), roots.end());
  {
    std::ostringstream os;
    for (auto t : roots) os << t.str() << " ";
    push("reducible", roots == e.expected_reducible, os.str());
  }

  // points: curve membership, torsion orders, heights
  std::vector<SectionPoint> generators;
  for (size_t i = 0; i < e.points.size(); ++i) {
    const CatalogPoint& cp = e.points[i];
    std::string tag = "point " + std::to_string(i);
    bool member = on_curve(e.model, cp.point);
    push(tag + " on curve", member);
    if (!member) continue;
    if (cp.expected_order) {
      auto ord = torsion_order(e.model, cp.point);
      push(tag + " order", ord.has_value() && *ord == *cp.expected_order,
           ord ? "order " + std::to_string(*ord) : "non-torsion");
    }
    if (cp.expected_height) {
      Rat h = height(S, cp.point);
      push(tag + " height", h == *cp.expected_height, rat_str(h));
    }
    if (cp.generator) generators.push_back(cp.point);
  }

  // torsion span: two distinct 2-torsion points realize (Z/2)^2
  if (e.expected_torsion == std::vector<Int>{2, 2}) {
    std::vector<SectionPoint> two;
    for (const auto& cp : e.points)
      if (cp.expected_order && *cp.expected_order == 2) two.push_back(cp.point);
    bool distinct = two.size() >= 2 && !(two[0] == two[1]);
    push("torsion span", distinct, "independent 2-torsion sections");
  }

  // regulator of the listed generators
  Rat regulator(1);
  if (!generators.empty()) {
    RatMat hm = height_matrix(S, generators);
    regulator = det(hm);
    regulator.canonicalize();
  }
  if (e.expected_regulator) {
    std::string note = rat_str(regulator);
    if (e.paper_regulator && *e.paper_regulator != regulator)
      note += " (printed value " + rat_str(*e.paper_regulator) + " fails the discriminant identity)";
    push("regulator", regulator == *e.expected_regulator, note);
  }

  // discriminant identity: det T * regulator / |tors|^2 = 8, whenever the
  // listed generators span the Mordell-Weil lattice
  if ((int)generators.size() == e.expected_rank) {
    Rat detT(1);
    for (const auto& f : S.fibers) detT *= fiber_root_det(f.fiber);
    Rat tors(1);
    for (const Int& t : e.expected_torsion) tors *= Rat(t);
    Rat lhs = detT * regulator / (tors * tors);
    lhs.canonicalize();
    push("discriminant identity", lhs == Rat(8),
         "det T = " + rat_str(detT) + ", regulator = " + rat_str(regulator) + ", |tors| = " +
             rat_str(tors));
  }

  // unique classification row
  {
    std::string err;
    const FibrationRecord* row = match_table1(table1, roots, e.expected_rank, e.expected_torsion, &err);
    if (row) {
      rep.matched_row = row->host_id + " | " + row->embedding;
      push("classification row", true, rep.matched_row);
    } else {
      push("classification row", false, err);
    }
  }

  rep.checks.push_back(spot_check_parametrization(e));
  return rep;
}

FullReport verify_catalog(const std::vector<CatalogEntry>& entries, int jobs) {
  FullReport out;
  std::vector<FibrationRecord> table1 = enumerate_all(jobs);
  out.entries.resize(entries.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
#endif
  for (long i = 0; i < (long)entries.size(); ++i)
    out.entries[i] = verify_entry(entries[i], table1);

  // bijection onto the classification
  std::set<std::string> rows;
  bool all_matched = true;
  for (const auto& r : out.entries) {
    if (r.matched_row.empty())
      all_matched = false;
    else
      rows.insert(r.matched_row);
  }
  bool bij = all_matched && rows.size() == entries.size() && entries.size() == table1.size();
  out.global.push_back(CheckResult{"bijection with the classification", bij, false,
                                   std::to_string(rows.size()) + " distinct rows matched by " +
                                       std::to_string(entries.size()) + " entries"});
  out.failures = 0;
  for (const auto& r : out.entries)
    for (const auto& c : r.checks)
      if (!c.pass && !c.skipped) ++out.failures;
  for (const auto& c : out.global)
    if (!c.pass && !c.skipped) ++out.failures;
  return out;
}

}  // namespace k3fib

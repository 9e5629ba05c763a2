#include "k3fib/points.hpp"

#include <cassert>
#include <stdexcept>

namespace k3fib {

bool on_curve(const Model& m, const SectionPoint& p) {
  if (p.infinity) return true;
  RatFunc a1(m.a1), a2(m.a2), a3(m.a3), a4(m.a4), a6(m.a6);
  RatFunc lhs = p.y * p.y + a1 * p.x * p.y + a3 * p.y;
  RatFunc rhs = p.x * p.x * p.x + a2 * p.x * p.x + a4 * p.x + a6;
  return lhs == rhs;
}

SectionPoint negate(const Model& m, const SectionPoint& p) {
  if (p.infinity) return p;
  return SectionPoint::at(p.x, -p.y - RatFunc(m.a1) * p.x - RatFunc(m.a3));
}

SectionPoint add(const Model& m, const SectionPoint& p, const SectionPoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  RatFunc a1(m.a1), a2(m.a2), a3(m.a3), a4(m.a4);
  RatFunc lambda;
  if (p.x == q.x) {
    if (p.y == negate(m, q).y) return SectionPoint::zero();
    // tangent
    RatFunc num = p.x * p.x * Rat(3) + a2 * p.x * Rat(2) + a4 - a1 * p.y;
    RatFunc den = p.y * Rat(2) + a1 * p.x + a3;
    lambda = num / den;
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  RatFunc x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
  RatFunc y3 = lambda * (p.x - x3) - p.y - a1 * x3 - a3;
  return SectionPoint::at(x3, y3);
}

SectionPoint multiple(const Model& m, int n, const SectionPoint& p) {
  if (n < 0) return multiple(m, -n, negate(m, p));
  SectionPoint acc = SectionPoint::zero();
  for (int i = 0; i < n; ++i) acc = add(m, acc, p);
  return acc;
}

std::optional<int> torsion_order(const Model& m, const SectionPoint& p, int bound) {
  // height 0 forces 2 (P.O) = sum contr - 4 <= sum e_v/4 - 4 <= 2 on a K3,
  // so a torsion section has den(x) of degree <= 2 and num(x) of degree
  // <= 4; a multiple past this bound cannot be torsion
  constexpr int kDegreeGuard = 8;
  SectionPoint acc = p;
  for (int n = 1; n <= bound; ++n) {
    if (acc.infinity) return n;
    if (acc.x.num.deg() > kDegreeGuard || acc.x.den.deg() > kDegreeGuard) return std::nullopt;
    acc = add(m, acc, p);
  }
  return std::nullopt;
}

namespace {

constexpr int kInfV = 1 << 20;  // valuation of the zero function

int vp(const RatFunc& f, const Poly& p) { return f.is_zero() ? kInfV : f.val(p); }

struct LocalCoords {
  RatFunc x, y;  // on the local minimal reduced frame
  int vx, vy;
};

// transport a section to the reduced minimal frame at one analyzed place
LocalCoords local_coords(const SurfaceAnalysis& S, const LocalAnalysis& L,
                         const SectionPoint& P) {
  const Model& m = L.place.at_infinity ? S.flipped : S.model;
  const ReducedForm& red = L.place.at_infinity ? S.red_inf : S.red;
  RatFunc x = P.x, y = P.y;
  if (L.place.at_infinity) {
    x = P.x.flip(2 * S.flip_k);
    y = P.y.flip(3 * S.flip_k);
  }
  RatFunc xab = x + RatFunc(red.x_shift);
  RatFunc yab = y + (RatFunc(m.a1) * x + RatFunc(m.a3)) * Rat(1, 2);
  const Poly place = L.place.at_infinity ? Poly::x() : L.place.p;
  if (L.rescale > 0) {
    RatFunc sc2(Poly::from({1})), sc3(Poly::from({1}));
    for (int i = 0; i < 2 * L.rescale; ++i) sc2 = sc2 * RatFunc(place);
    for (int i = 0; i < 3 * L.rescale; ++i) sc3 = sc3 * RatFunc(place);
    xab = xab / sc2;
    yab = yab / sc3;
  }
  return LocalCoords{xab, yab, vp(xab, place), vp(yab, place)};
}

}  // namespace

ComponentHit component_index(const SurfaceAnalysis& S, const LocalAnalysis& L,
                             const SectionPoint& P) {
  ComponentHit hit;
  hit.contr = 0;
  if (P.infinity) return hit;
  const Poly place = L.place.at_infinity ? Poly::x() : L.place.p;
  ResidueField k{place};
  LocalCoords lc = local_coords(S, L, P);
  switch (L.fiber.type) {
    case KodairaType::I0:
    case KodairaType::II:
      return hit;
    case KodairaType::In: {
      if (lc.vx < 0) return hit;  // meets the zero component near O
      assert(L.sing_x.has_value());
      RatFunc dx = lc.x - RatFunc(*L.sing_x);
      if (vp(dx, place) < 1 || lc.vy < 1) return hit;
      int n = L.fiber.n;
      int w = std::min(lc.vy, n / 2);  // the 2-torsion locus meets component n/2
      int j = std::min(w, n - w);
      hit.identity = (j == 0);
      hit.j = j;
      hit.contr = ratio(Int(j) * (n - j), Int(n));
      return hit;
    }
    default: {
      if (lc.vx < 1 || lc.vy < 1) return hit;  // identity component
      hit.identity = false;
      switch (L.fiber.type) {
        case KodairaType::III: hit.contr = Rat(1, 2); break;
        case KodairaType::IV: hit.contr = Rat(2, 3); break;
        case KodairaType::IVstar: hit.contr = Rat(4, 3); break;
        case KodairaType::IIIstar: hit.contr = Rat(3, 2); break;
        case KodairaType::IIstar:
          throw std::logic_error("section through the II* singular point");
        case KodairaType::Instar: {
          int n = L.fiber.n;
          if (n == 0) {
            hit.contr = Rat(1);
            hit.j = 1;
            return hit;
          }
          // near component unless the section follows the double-root branch
          assert(L.star_dbl.has_value());
          RatFunc X = lc.x / RatFunc(place);
          // X reduced mod place: subtract the double root and test valuation
          RatFunc dd = X - RatFunc(*L.star_dbl);
          bool far = dd.is_zero() || dd.val(place) >= 1;
          hit.far = far;
          hit.j = far ? 2 : 1;
          hit.contr = far ? Rat(1) + ratio(n, 4) : Rat(1);
          break;
        }
        default: break;
      }
      return hit;
    }
  }
}

Rat section_zero_intersection(const SurfaceAnalysis& S, const SectionPoint& P) {
  if (P.infinity) return Rat(0);
  Rat total(0);
  auto pole_term = [](int v) { return v >= 0 ? Int(0) : fdiv(Int(-v + 1), 2); };
  RatFunc xab_t = P.x + RatFunc(S.red.x_shift);
  std::vector<Poly> handled;
  for (const auto& L : S.fibers) {
    LocalCoords lc = local_coords(S, L, P);
    int degree = L.place.at_infinity ? 1 : L.place.p.deg();
    total += Rat(pole_term(lc.vx == kInfV ? 0 : lc.vx) * degree);
    if (!L.place.at_infinity) handled.push_back(L.place.p);
  }
  // poles of x at places of good reduction (each closed place counts with
  // its residue degree)
  if (!xab_t.is_zero()) {
    for (auto& [p, mult] : factor_poly(xab_t.den)) {
      (void)mult;
      bool seen = false;
      for (const Poly& h : handled) seen = seen || h == p;
      if (seen) continue;
      total += Rat(pole_term(xab_t.val(p)) * p.deg());
    }
  }
  // pole at infinity when the infinite place has good reduction
  bool inf_handled = false;
  for (const auto& L : S.fibers) inf_handled = inf_handled || L.place.at_infinity;
  if (!inf_handled) {
    RatFunc xu = P.x.flip(2 * S.flip_k) + RatFunc(S.red_inf.x_shift);
    total += Rat(pole_term(vp(xu, Poly::x()) == kInfV ? 0 : vp(xu, Poly::x())));
  }
  return total;
}

Rat height(const SurfaceAnalysis& S, const SectionPoint& P) {
  if (P.infinity) return Rat(0);
  Rat h = Rat(4) + Rat(2) * section_zero_intersection(S, P);
  for (const auto& L : S.fibers) {
    int degree = L.place.at_infinity ? 1 : L.place.p.deg();
    h -= component_index(S, L, P).contr * Rat(degree);
  }
  h.canonicalize();
  return h;
}

Rat height_pairing(const SurfaceAnalysis& S, const SectionPoint& P, const SectionPoint& Q) {
  if (P.infinity || Q.infinity) return Rat(0);
  SectionPoint sum = add(S.model, P, Q);
  Rat v = (height(S, sum) - height(S, P) - height(S, Q)) / 2;
  v.canonicalize();
  return v;
}

RatMat height_matrix(const SurfaceAnalysis& S, const std::vector<SectionPoint>& pts) {
  int n = (int)pts.size();
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = height(S, pts[i]);
    for (int j = i + 1; j < n; ++j) m.at(i, j) = m.at(j, i) = height_pairing(S, pts[i], pts[j]);
  }
  return m;
}

}  // namespace k3fib

#include "k3fib/tate.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace k3fib {

int KodairaFiber::euler() const {
  switch (type) {
    case KodairaType::I0: return 0;
    case KodairaType::In: return n;
    case KodairaType::II: return 2;
    case KodairaType::III: return 3;
    case KodairaType::IV: return 4;
    case KodairaType::Instar: return n + 6;
    case KodairaType::IVstar: return 8;
    case KodairaType::IIIstar: return 9;
    case KodairaType::IIstar: return 10;
  }
  return 0;
}

int KodairaFiber::component_count() const {
  switch (type) {
    case KodairaType::I0: return 1;
    case KodairaType::In: return n;
    case KodairaType::II: return 1;
    case KodairaType::III: return 2;
    case KodairaType::IV: return 3;
    case KodairaType::Instar: return n + 5;
    case KodairaType::IVstar: return 7;
    case KodairaType::IIIstar: return 8;
    case KodairaType::IIstar: return 9;
  }
  return 1;
}

bool KodairaFiber::has_root_type() const {
  switch (type) {
    case KodairaType::I0: return false;
    case KodairaType::In: return n >= 2;
    case KodairaType::II: return false;
    default: return true;
  }
}

DynkinType KodairaFiber::root_type() const {
  assert(has_root_type());
  switch (type) {
    case KodairaType::In: return DynkinType{'A', n - 1};
    case KodairaType::III: return DynkinType{'A', 1};
    case KodairaType::IV: return DynkinType{'A', 2};
    case KodairaType::Instar: return DynkinType{'D', n + 4};
    case KodairaType::IVstar: return DynkinType{'E', 6};
    case KodairaType::IIIstar: return DynkinType{'E', 7};
    case KodairaType::IIstar: return DynkinType{'E', 8};
    default: break;
  }
  return DynkinType{'A', 0};
}

std::string KodairaFiber::label() const {
  switch (type) {
    case KodairaType::I0: return "I0";
    case KodairaType::In: return "I" + std::to_string(n);
    case KodairaType::II: return "II";
    case KodairaType::III: return "III";
    case KodairaType::IV: return "IV";
    case KodairaType::Instar: return "I" + std::to_string(n) + "*";
    case KodairaType::IVstar: return "IV*";
    case KodairaType::IIIstar: return "III*";
    case KodairaType::IIstar: return "II*";
  }
  return "?";
}

std::string Place::str() const {
  if (at_infinity) return "inf";
  return p.str();
}

namespace {

Poly divided(const Poly& f, const Poly& p, int k) {
  Poly r = f;
  for (int i = 0; i < k; ++i) {
    auto [q, rem] = divmod(r, p);
    assert(rem.is_zero());
    r = q;
  }
  return r;
}

}  // namespace

LocalAnalysis tate_at(const ReducedForm& red, const Poly& place) {
  LocalAnalysis L;
  L.place = Place{false, place};
  L.A = red.A;
  L.B = red.B;
  Poly delta = red.Delta;
  ResidueField k{place};

  while (true) {
    int vD = delta.is_zero() ? -1 : valuation(delta, place);
    assert(vD >= 0);
    if (vD == 0) {
      L.fiber = KodairaFiber{KodairaType::I0, 0};
      L.vD = 0;
      return L;
    }
    int vA = L.A.is_zero() ? 1000 : valuation(L.A, place);
    int vB = L.B.is_zero() ? 1000 : valuation(L.B, place);
    if (vA >= 4 && vB >= 6) {
      // non-minimal: (x, y) -> (p^2 x, p^3 y)
      assert(vD >= 12);
      L.A = divided(L.A, place, 4);
      L.B = divided(L.B, place, 6);
      delta = divided(delta, place, 12);
      ++L.rescale;
      continue;
    }
    L.vA = vA;
    L.vB = vB;
    L.vD = vD;
    if (vA == 0) {
      // multiplicative: node at the double root of the cubic
      L.fiber = KodairaFiber{KodairaType::In, vD};
      auto x0 = multiple_root(k, Poly(), L.A, L.B);
      assert(x0.has_value());
      L.sing_x = *x0;
      return L;
    }
    if (vB == 1) {
      L.fiber = KodairaFiber{KodairaType::II, 0};
      return L;
    }
    if (vA == 1) {  // vB >= 2
      L.fiber = KodairaFiber{KodairaType::III, 0};
      return L;
    }
    if (vB == 2) {  // vA >= 2
      L.fiber = KodairaFiber{KodairaType::IV, 0};
      return L;
    }
    // vA >= 2, vB >= 3: quotient cubic T^3 + A2 T + B3 over k
    Poly A2 = k.reduce(divided(L.A, place, 2));
    Poly B3 = k.reduce(divided(L.B, place, 3));
    bool triple = A2.is_zero() && B3.is_zero();
    if (!triple) {
      auto dbl = multiple_root(k, Poly(), A2, B3);
      if (!dbl.has_value()) {
        assert(vD == 6);
        L.fiber = KodairaFiber{KodairaType::Instar, 0};
      } else {
        assert(vD > 6);
        L.fiber = KodairaFiber{KodairaType::Instar, vD - 6};
        L.star_dbl = *dbl;
      }
      return L;
    }
    // triple root: vA >= 3, vB >= 4
    if (vB == 4) {
      L.fiber = KodairaFiber{KodairaType::IVstar, 0};
      return L;
    }
    if (vA == 3) {  // vB >= 5
      L.fiber = KodairaFiber{KodairaType::IIIstar, 0};
      return L;
    }
    assert(vB == 5);  // vA >= 4; (>=4, >=6) was caught as non-minimal
    L.fiber = KodairaFiber{KodairaType::IIstar, 0};
    return L;
  }
}

SurfaceAnalysis analyze_surface(const Model& m, bool require_k3) {
  SurfaceAnalysis S;
  S.model = m;
  S.red = reduce(m);
  S.flipped = flip_model(m, &S.flip_k);
  S.red_inf = reduce(S.flipped);

  for (auto& [p, mult] : factor_poly(S.red.Delta)) {
    (void)mult;
    LocalAnalysis L = tate_at(S.red, p);
    if (L.fiber.type == KodairaType::I0) continue;
    S.fibers.push_back(std::move(L));
  }
  {
    Poly u = Poly::x();
    if (!S.red_inf.Delta.is_zero() && valuation(S.red_inf.Delta, u) > 0) {
      LocalAnalysis L = tate_at(S.red_inf, u);
      L.place.at_infinity = true;
      if (L.fiber.type != KodairaType::I0) S.fibers.push_back(std::move(L));
    }
  }
  S.euler_sum = 0;
  for (const auto& f : S.fibers) {
    int degree = f.place.at_infinity ? 1 : f.place.p.deg();
    S.euler_sum += f.fiber.euler() * degree;  // one fiber per geometric point
  }
  if (require_k3 && S.euler_sum != 24) {
    std::ostringstream os;
    os << "Euler numbers sum to " << S.euler_sum << ", not 24:";
    for (const auto& f : S.fibers)
      os << " " << f.fiber.label() << "@" << f.place.str();
    throw std::domain_error(os.str());
  }
  return S;
}

}  // namespace k3fib

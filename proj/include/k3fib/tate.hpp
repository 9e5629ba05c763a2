// Kodaira fiber classification over Q(t) at every place of P^1, by Tate's
// algorithm on the reduced frame y^2 = x^3 + Ax + B (residue characteristic
// is always zero here, so squares and cubes complete globally).
#pragma once

#include "k3fib/lattice.hpp"
#include "k3fib/weierstrass.hpp"

namespace k3fib {

enum class KodairaType { I0, In, II, III, IV, Instar, IVstar, IIIstar, IIstar };

struct KodairaFiber {
  KodairaType type = KodairaType::I0;
  int n = 0;  // In (n >= 1) and Instar (n >= 0)
  int euler() const;
  int component_count() const;
  bool has_root_type() const;
  DynkinType root_type() const;  // valid when has_root_type()
  std::string label() const;     // "I8", "I4*", "III*", ...
};

struct Place {
  bool at_infinity = false;
  Poly p;  // monic irreducible, finite places only
  std::string str() const;
  bool operator==(const Place& o) const { return at_infinity == o.at_infinity && p == o.p; }
};

// per-place analysis: the minimal reduced local model and everything the
// height pairing later needs
struct LocalAnalysis {
  Place place;
  KodairaFiber fiber;
  int rescale = 0;                // (A,B) divided by p^(4m), p^(6m)
  Poly A, B;                      // local minimal reduced coefficients
  int vA = 0, vB = 0, vD = 0;     // valuations of the minimal data
  std::optional<Poly> sing_x;     // multiplicative: lift of the node abscissa
  std::optional<Poly> star_dbl;   // Instar, n>=1: double root of the quotient cubic
};

struct SurfaceAnalysis {
  Model model;       // the polynomial model analyzed (t-chart)
  ReducedForm red;   // global A, B, Delta, x-shift on the t-chart
  Model flipped;     // u = 1/t chart
  int flip_k = 0;
  ReducedForm red_inf;
  std::vector<LocalAnalysis> fibers;  // bad places, finite ones first
  int euler_sum = 0;
};

LocalAnalysis tate_at(const ReducedForm& red, const Poly& place);

// full fiber analysis; with require_k3 the Euler sum must be exactly 24
// (hard failure naming the fibers otherwise)
SurfaceAnalysis analyze_surface(const Model& m, bool require_k3 = true);

}  // namespace k3fib

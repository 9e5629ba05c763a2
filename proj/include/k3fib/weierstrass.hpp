// Weierstrass models over Q(t): the printed (raw) forms with rational-
// function coefficients, their polynomial normalizations, the standard
// b/c-invariants, and the residue-field arithmetic Tate's algorithm needs.
#pragma once

#include "k3fib/ratfunc.hpp"

namespace k3fib {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with polynomial coefficients
struct Model {
  Poly a1, a2, a3, a4, a6;
};

struct RawModel {
  RatFunc a1, a2, a3, a4, a6;
};

Poly b2(const Model& m);
Poly b4(const Model& m);
Poly b6(const Model& m);
Poly b8(const Model& m);
Poly c4(const Model& m);
Poly c6(const Model& m);
// 1728 disc = c4^3 - c6^2 is cross-checked against the b-form internally;
// throws std::domain_error("not an elliptic surface") when disc = 0
Poly discriminant(const Model& m);

// reduced frame y^2 = x^3 + A x + B with A = -c4/48, B = -c6/864;
// x_AB = x + b2/12, y_AB = y + (a1 x + a3)/2
struct ReducedForm {
  Poly A, B, Delta;
  Poly x_shift;  // b2/12
};
ReducedForm reduce(const Model& m);

// scale (x, y) -> (u^2 x', u^3 y'): smallest monomial-free u in Q(t) making
// every u^i a_i polynomial; reports u
Model normalize(const RawModel& raw, RatFunc* u_out = nullptr);

// chart at infinity: t = 1/u, (x, y) -> (x/u^(2k), y/u^(3k)) with
// k = max_i ceil(deg a_i / i); the returned model has polynomial
// coefficients in u
Model flip_model(const Model& m, int* k_out);

// residue field Q[t]/(p), p monic irreducible
struct ResidueField {
  Poly p;

  Poly reduce(const Poly& f) const { return divmod(f, p).second; }
  bool is_zero(const Poly& f) const { return reduce(f).is_zero(); }
  Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
  Poly inv(const Poly& a) const;  // throws on zero
};

// polynomials over the residue field, for root hunting in Tate's algorithm
using KPoly = std::vector<Poly>;  // ascending, entries reduced
KPoly k_trim(const ResidueField& k, KPoly f);
KPoly k_monic_gcd(const ResidueField& k, KPoly a, KPoly b);

// the multiple root of a cubic T^3 + aT^2 + bT + c with a repeated (double
// or triple) root over k; nullopt when the cubic is separable
std::optional<Poly> multiple_root(const ResidueField& k, const Poly& a, const Poly& b,
                                  const Poly& c);

}  // namespace k3fib

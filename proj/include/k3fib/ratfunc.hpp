// Rational functions over Q(t): reduced fractions with monic denominator.
#pragma once

#include "k3fib/poly.hpp"

namespace k3fib {

struct RatFunc {
  Poly num;  // gcd(num, den) = 1
  Poly den;  // monic, nonzero

  RatFunc() : den(Poly::from({1})) {}
  RatFunc(Poly n, Poly d);
  explicit RatFunc(const Poly& p) : num(p), den(Poly::from({1})) {}
  explicit RatFunc(const Rat& v) : num(Poly(v)), den(Poly::from({1})) {}
  static RatFunc t() { return RatFunc(Poly::x()); }

  bool is_zero() const { return num.is_zero(); }
  bool is_poly() const { return den.deg() == 0; }
  Poly as_poly() const;  // throws unless is_poly()

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator*(const Rat& k) const { return RatFunc(num * k, den); }
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }

  // order of vanishing at the finite place p (monic irreducible); negative at
  // poles; throws on the zero function
  int val(const Poly& p) const;
  // f(1/u) * u^k as a function of u
  RatFunc flip(int k) const;
  Rat eval(const Rat& v) const;  // throws on pole
  std::string str(const std::string& var = "t") const;
};

RatFunc pow(const RatFunc& f, int e);

}  // namespace k3fib

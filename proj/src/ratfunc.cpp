#include "k3fib/ratfunc.hpp"

#include <cassert>
#include <stdexcept>

namespace k3fib {

RatFunc::RatFunc(Poly n, Poly d) {
  if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (n.is_zero()) {
    num = Poly();
    den = Poly::from({1});
    return;
  }
  Poly g = gcd_poly(n, d);
  if (g.deg() >= 1) {
    n = divmod(n, g).first;
    d = divmod(d, g).first;
  }
  Rat lead = d.lead();
  num = n * (1 / lead);
  den = d * (1 / lead);
}

Poly RatFunc::as_poly() const {
  if (!is_poly()) throw std::domain_error("rational function is not polynomial");
  return num;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num = -r.num;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num * o.den + o.num * den, den * o.den);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num * o.den - o.num * den, den * o.den);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num * o.num, den * o.den); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(num * o.den, den * o.num);
}

int RatFunc::val(const Poly& p) const {
  if (is_zero()) throw std::domain_error("valuation of zero");
  return valuation(num, p) - valuation(den, p);
}

RatFunc RatFunc::flip(int k) const {
  if (is_zero()) return RatFunc();
  // f(1/u) u^k = num(1/u) u^k / den(1/u) = num.rev(dn)*u^(k+dd-dn)/den.rev(dd)
  int dn = num.deg(), dd = den.deg();
  Poly n = num.reverse(dn);
  Poly d = den.reverse(dd);
  int shift = k + dd - dn;
  Poly u_pow = Poly::from({1});
  Poly x = Poly::x();
  for (int i = 0; i < std::abs(shift); ++i) u_pow = u_pow * x;
  if (shift >= 0) return RatFunc(n * u_pow, d);
  return RatFunc(n, d * u_pow);
}

Rat RatFunc::eval(const Rat& v) const {
  Rat d = den.eval(v);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num.eval(v) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_poly()) return num.str(var);
  return "(" + num.str(var) + ")/(" + den.str(var) + ")";
}

RatFunc pow(const RatFunc& f, int e) {
  RatFunc r(Poly::from({1}));
  RatFunc b = e >= 0 ? f : RatFunc(Poly::from({1})) / f;
  for (int i = 0; i < std::abs(e); ++i) r = r * b;
  return r;
}

}  // namespace k3fib

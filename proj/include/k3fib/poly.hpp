// Dense univariate polynomials over Q, exact throughout.  Degree of the zero
// polynomial is reported as -1 (the "minus infinity" sentinel).
#pragma once

#include <vector>

#include "k3fib/numeric.hpp"

namespace k3fib {

struct Poly {
  std::vector<Rat> c;  // ascending, trailing zeros trimmed

  Poly() = default;
  explicit Poly(Rat v) {
    if (v != 0) c.push_back(std::move(v));
  }
  static Poly x() { return from({0, 1}); }
  static Poly from(std::initializer_list<long> coeffs);
  static Poly from_rats(std::vector<Rat> coeffs);

  int deg() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  const Rat& operator[](int i) const;
  Rat lead() const;
  void trim();
  bool is_monic() const { return !is_zero() && lead() == 1; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& k) const;
  bool operator==(const Poly& o) const { return c == o.c; }

  Rat eval(const Rat& v) const;
  Poly derivative() const;
  Poly monic() const;
  // u^m * p(1/u) for m >= deg
  Poly reverse(int m) const;
  std::string str(const std::string& var = "t") const;
};

// quotient and remainder over Q, o nonzero
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& o);
Poly gcd_poly(const Poly& a, const Poly& b);  // monic

// multiplicity of the irreducible p in f (f nonzero)
int valuation(const Poly& f, const Poly& p);

// f = prod g_i^i with g_i squarefree and pairwise coprime; returns (g_i, i)
// for the nonconstant g_i
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f);

// monic irreducible factors over Q with multiplicities (unit dropped)
std::vector<std::pair<Poly, int>> factor_poly(const Poly& f);

// content/primitive integer form: f = cont * prim with prim in Z[t],
// primitive, positive leading coefficient
struct IntPoly {
  std::vector<Int> c;
  int deg() const { return (int)c.size() - 1; }
};
std::pair<Rat, IntPoly> to_integer(const Poly& f);
Poly from_integer(const IntPoly& f);

}  // namespace k3fib

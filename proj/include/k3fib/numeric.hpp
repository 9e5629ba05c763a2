// Exact arithmetic primitives shared by every module: arbitrary-precision
// integers and reduced rationals (GMP), plus the handful of integer helpers
// the lattice and polynomial kernels need.
#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace k3fib {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// floor(a / b), b != 0
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// floor(sqrt(n)), n >= 0
inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// canonicalized rational a/b (mpq two-argument constructors do not reduce)
inline Rat ratio(const Int& a, const Int& b) {
  Rat q(a, b);
  q.canonicalize();
  return q;
}
inline Rat ratio(long a, long b) { return ratio(Int(a), Int(b)); }

inline Int num(const Rat& q) { return Int(q.get_num()); }
inline Int den(const Rat& q) { return Int(q.get_den()); }

inline Int floor_rat(const Rat& q) { return fdiv(num(q), den(q)); }
inline Int ceil_rat(const Rat& q) { return -fdiv(-num(q), den(q)); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// canonical representative of q mod m in [0, m)
inline Rat mod_rat(const Rat& q, const Rat& m) {
  Rat r = q - m * Rat(floor_rat(q / m));
  r.canonicalize();
  return r;
}

// canonical "p/q" (or "p" when integral) used by every serializer
inline std::string rat_str(const Rat& q) {
  return is_integer(q) ? num(q).get_str() : num(q).get_str() + "/" + den(q).get_str();
}

inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace k3fib

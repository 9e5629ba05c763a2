#include "k3fib/poly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace k3fib {

Poly Poly::from(std::initializer_list<long> coeffs) {
  Poly p;
  for (long v : coeffs) p.c.emplace_back(v);
  p.trim();
  return p;
}

Poly Poly::from_rats(std::vector<Rat> coeffs) {
  Poly p;
  p.c = std::move(coeffs);
  p.trim();
  return p;
}

const Rat& Poly::operator[](int i) const {
  static const Rat zero(0);
  return (i >= 0 && i < (int)c.size()) ? c[i] : zero;
}

Rat Poly::lead() const {
  assert(!is_zero());
  return c.back();
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rat& v : r.c) v = -v;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c.resize(std::max(c.size(), o.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = (*this)[(int)i] + o[(int)i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly r;
  r.c.assign(c.size() + o.c.size() - 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (size_t j = 0; j < o.c.size(); ++j)
      if (o.c[j] != 0) r.c[i + j] += c[i] * o.c[j];
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const Rat& k) const {
  if (k == 0) return Poly();
  Poly r = *this;
  for (Rat& v : r.c) v *= k;
  return r;
}

Rat Poly::eval(const Rat& v) const {
  Rat acc(0);
  for (int i = deg(); i >= 0; --i) acc = acc * v + c[i];
  return acc;
}

Poly Poly::derivative() const {
  Poly r;
  for (int i = 1; i <= deg(); ++i) r.c.push_back(c[i] * Rat(i));
  r.trim();
  return r;
}

Poly Poly::monic() const {
  assert(!is_zero());
  return *this * (1 / lead());
}

Poly Poly::reverse(int m) const {
  assert(m >= deg());
  Poly r;
  r.c.assign(m + 1, Rat(0));
  for (int i = 0; i <= deg(); ++i) r.c[m - i] = c[i];
  r.trim();
  return r;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c[i] == 0) continue;
    Rat v = c[i];
    if (!first) {
      os << (v > 0 ? " + " : " - ");
      if (v < 0) v = -v;
    }
    first = false;
    bool unit = (v == 1 && i != 0);
    if (!unit) os << rat_str(v);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& o) {
  assert(!o.is_zero());
  Poly q, r = f;
  Rat inv = 1 / o.lead();
  while (r.deg() >= o.deg()) {
    int k = r.deg() - o.deg();
    Rat coef = r.lead() * inv;
    if ((int)q.c.size() < k + 1) q.c.resize(k + 1);
    q.c[k] = coef;
    for (int i = 0; i <= o.deg(); ++i) r.c[i + k] -= coef * o.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly gcd_poly(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  // primitive pseudo-remainder sequence over Z (classical Euclid over Q
  // suffers catastrophic coefficient growth on the large operands the group
  // law produces)
  auto prim = [](const Poly& f) {
    auto [cont, ip] = to_integer(f);
    (void)cont;
    return ip.c;
  };
  auto trimv = [](std::vector<Int>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  };
  auto content = [](const std::vector<Int>& f) {
    Int g = 0;
    for (const Int& c : f) g = gcd(g, c);
    return g == 0 ? Int(1) : g;
  };
  std::vector<Int> x = prim(a), y = prim(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    // pseudo-remainder: r = lc(y)^(dx-dy+1) x mod y
    int dy = (int)y.size() - 1;
    const Int lc = y.back();
    std::vector<Int> r = x;
    while ((int)r.size() - 1 >= dy) {
      Int top = r.back();
      int k = (int)r.size() - 1 - dy;
      for (Int& c : r) c *= lc;
      for (int i = 0; i <= dy; ++i) r[i + k] -= top * y[i];
      trimv(r);
      if (r.empty()) break;
    }
    Int cont = content(r);
    if (cont != 1)
      for (Int& c : r) c /= cont;
    x = std::move(y);
    y = std::move(r);
  }
  Poly g;
  for (const Int& c : x) g.c.emplace_back(c);
  g.trim();
  return g.is_zero() ? g : g.monic();
}

int valuation(const Poly& f, const Poly& p) {
  assert(!f.is_zero() && p.deg() >= 1);
  int v = 0;
  Poly r = f;
  while (true) {
    auto [q, rem] = divmod(r, p);
    if (!rem.is_zero()) return v;
    ++v;
    r = q;
  }
}

std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f) {
  // Yun's algorithm (characteristic zero)
  std::vector<std::pair<Poly, int>> out;
  if (f.deg() < 1) return out;
  Poly a = f.monic();
  Poly g = gcd_poly(a, a.derivative());
  Poly w = divmod(a, g).first;
  Poly y = divmod(a.derivative(), g).first;
  Poly z = y - w.derivative();
  int i = 1;
  while (w.deg() != 0) {
    Poly h = gcd_poly(w, z);
    if (h.deg() >= 1) out.emplace_back(h, i);
    w = divmod(w, h).first;
    y = divmod(z, h).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

std::pair<Rat, IntPoly> to_integer(const Poly& f) {
  assert(!f.is_zero());
  Int d = 1;
  for (const Rat& v : f.c) d = lcm(d, den(v));
  Int g = 0;
  std::vector<Int> c(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) {
    Rat s = f.c[i] * Rat(d);
    s.canonicalize();
    c[i] = num(s);
    g = gcd(g, c[i]);
  }
  if (c.back() < 0) g = -g;
  for (Int& v : c) v /= g;
  IntPoly p;
  p.c = std::move(c);
  Rat cont = ratio(g, d);
  return {cont, p};
}

Poly from_integer(const IntPoly& f) {
  Poly p;
  for (const Int& v : f.c) p.c.emplace_back(v);
  p.trim();
  return p;
}

}  // namespace k3fib

#include "k3fib/weierstrass.hpp"

#include <cassert>
#include <stdexcept>

namespace k3fib {

Poly b2(const Model& m) { return m.a1 * m.a1 + m.a2 * Rat(4); }
Poly b4(const Model& m) { return m.a4 * Rat(2) + m.a1 * m.a3; }
Poly b6(const Model& m) { return m.a3 * m.a3 + m.a6 * Rat(4); }
Poly b8(const Model& m) {
  return m.a1 * m.a1 * m.a6 + m.a2 * m.a6 * Rat(4) - m.a1 * m.a3 * m.a4 + m.a2 * m.a3 * m.a3 -
         m.a4 * m.a4;
}
Poly c4(const Model& m) { return b2(m) * b2(m) - b4(m) * Rat(24); }
Poly c6(const Model& m) {
  Poly B2 = b2(m);
  return -(B2 * B2 * B2) + B2 * b4(m) * Rat(36) - b6(m) * Rat(216);
}

Poly discriminant(const Model& m) {
  Poly B2 = b2(m), B4 = b4(m), B6 = b6(m), B8 = b8(m);
  // 4 b8 = b2 b6 - b4^2 must hold identically
  assert(B8 * Rat(4) == B2 * B6 - B4 * B4);
  Poly d = -(B2 * B2 * B8) - B4 * B4 * B4 * Rat(8) - B6 * B6 * Rat(27) + B2 * B4 * B6 * Rat(9);
  Poly C4 = c4(m), C6 = c6(m);
  assert(d * Rat(1728) == C4 * C4 * C4 - C6 * C6);
  if (d.is_zero()) throw std::domain_error("not an elliptic surface (disc = 0)");
  return d;
}

ReducedForm reduce(const Model& m) {
  ReducedForm r;
  r.A = c4(m) * Rat(-1, 48);
  r.B = c6(m) * Rat(-1, 864);
  r.Delta = discriminant(m);
  r.x_shift = b2(m) * Rat(1, 12);
  // y^2 = x^3 + Ax + B has discriminant -16(4A^3 + 27B^2) = Delta
  assert((r.A * r.A * r.A * Rat(4) + r.B * r.B * Rat(27)) * Rat(-16) == r.Delta);
  return r;
}

Model normalize(const RawModel& raw, RatFunc* u_out) {
  // u = prod p^e over places where some a_i has a pole, e = max ceil(-v/i)
  const RatFunc* as[5] = {&raw.a1, &raw.a2, &raw.a3, &raw.a4, &raw.a6};
  const int weight[5] = {1, 2, 3, 4, 6};
  Poly dens = Poly::from({1});
  for (auto* a : as)
    if (!a->is_zero()) dens = dens * a->den;
  RatFunc u(Poly::from({1}));
  if (dens.deg() >= 1) {
    for (auto& [p, mult] : factor_poly(dens)) {
      (void)mult;
      int e = 0;
      for (int i = 0; i < 5; ++i) {
        if (as[i]->is_zero()) continue;
        int v = as[i]->val(p);
        if (v < 0) e = std::max(e, (-v + weight[i] - 1) / weight[i]);
      }
      for (int j = 0; j < e; ++j) u = u * RatFunc(p);
    }
  }
  Model m;
  Poly* out[5] = {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6};
  for (int i = 0; i < 5; ++i) {
    RatFunc scaled = *as[i] * pow(u, weight[i]);
    *out[i] = scaled.as_poly();
  }
  if (u_out) *u_out = u;
  return m;
}

Model flip_model(const Model& m, int* k_out) {
  const Poly* as[5] = {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6};
  const int weight[5] = {1, 2, 3, 4, 6};
  int k = 0;
  for (int i = 0; i < 5; ++i) {
    if (as[i]->is_zero()) continue;
    k = std::max(k, (as[i]->deg() + weight[i] - 1) / weight[i]);
  }
  Model f;
  Poly* out[5] = {&f.a1, &f.a2, &f.a3, &f.a4, &f.a6};
  for (int i = 0; i < 5; ++i) {
    if (as[i]->is_zero()) continue;
    *out[i] = as[i]->reverse(weight[i] * k);  // u^(i k) a_i(1/u)
  }
  if (k_out) *k_out = k;
  return f;
}

Poly ResidueField::inv(const Poly& a) const {
  Poly r = reduce(a);
  if (r.is_zero()) throw std::domain_error("residue inverse of zero");
  Poly r0 = p, r1 = r, s0, s1 = Poly::from({1});
  while (!r1.is_zero()) {
    auto [q, rem] = divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  assert(r0.deg() == 0);
  return reduce(s0 * (1 / r0[0]));
}

KPoly k_trim(const ResidueField& k, KPoly f) {
  for (Poly& c : f) c = k.reduce(c);
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

namespace {

KPoly k_rem(const ResidueField& k, KPoly f, const KPoly& g) {
  Poly inv = k.inv(g.back());
  while (f.size() >= g.size()) {
    Poly c = k.mul(f.back(), inv);
    size_t off = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) f[i + off] = k.reduce(f[i + off] - c * g[i]);
    while (!f.empty() && k.is_zero(f.back())) f.pop_back();
  }
  return f;
}

}  // namespace

KPoly k_monic_gcd(const ResidueField& k, KPoly a, KPoly b) {
  a = k_trim(k, std::move(a));
  b = k_trim(k, std::move(b));
  while (!b.empty()) {
    KPoly r = k_rem(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Poly inv = k.inv(a.back());
    for (Poly& c : a) c = k.mul(c, inv);
  }
  return a;
}

std::optional<Poly> multiple_root(const ResidueField& k, const Poly& a, const Poly& b,
                                  const Poly& c) {
  KPoly f{c, b, a, Poly::from({1})};
  KPoly df{b, a * Rat(2), Poly::from({3})};
  KPoly g = k_monic_gcd(k, f, df);
  if (g.size() <= 1) return std::nullopt;   // separable cubic
  if (g.size() == 2) return k.reduce(-g[0]);  // double root
  // degree-2 gcd means a triple root, which sits at -a/3 in characteristic 0
  return k.reduce(a * Rat(-1, 3));
}

}  // namespace k3fib

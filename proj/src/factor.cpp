// Rational polynomial factorization: squarefree split (Yun), then the
// classical route for each squarefree primitive part -- factor mod a good
// small prime (distinct-degree + equal-degree splitting), Hensel lift past
// the Mignotte bound, recombine subsets.  Degrees here stay around 24 with
// very few modular factors, so nothing fancier is needed.
#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>

#include "k3fib/poly.hpp"

namespace k3fib {

namespace {

using ModPoly = std::vector<int64_t>;  // ascending, coefficients in [0, p)

void mp_trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!b[j]) continue;
      r[i + j] = (int64_t)(((__int128)a[i] * b[j] + r[i + j]) % p);
    }
  }
  mp_trim(r);
  return r;
}

int64_t mod_pow(int64_t b, int64_t e, int64_t p) {
  int64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = (int64_t)((__int128)r * b % p);
    b = (int64_t)((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

int64_t mod_inv(int64_t a, int64_t p) { return mod_pow(a, p - 2, p); }

ModPoly mp_rem(ModPoly f, const ModPoly& g, int64_t p) {
  assert(!g.empty());
  int64_t inv = mod_inv(g.back(), p);
  while (f.size() >= g.size()) {
    int64_t c = (int64_t)((__int128)f.back() * inv % p);
    size_t k = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) {
      f[i + k] = (f[i + k] - (int64_t)((__int128)c * g[i] % p) % p + p) % p;
    }
    mp_trim(f);
  }
  return f;
}

ModPoly mp_divexact(ModPoly f, const ModPoly& g, int64_t p) {
  ModPoly q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, 0);
  int64_t inv = mod_inv(g.back(), p);
  while (f.size() >= g.size()) {
    int64_t c = (int64_t)((__int128)f.back() * inv % p);
    size_t k = f.size() - g.size();
    q[k] = c;
    for (size_t i = 0; i < g.size(); ++i)
      f[i + k] = (f[i + k] - (int64_t)((__int128)c * g[i] % p) % p + p) % p;
    mp_trim(f);
  }
  assert(f.empty());
  mp_trim(q);
  return q;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, int64_t p) {
  while (!b.empty()) {
    ModPoly r = mp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    int64_t inv = mod_inv(a.back(), p);
    for (auto& c : a) c = (int64_t)((__int128)c * inv % p);
  }
  return a;
}

ModPoly mp_deriv(const ModPoly& f, int64_t p) {
  ModPoly r;
  for (size_t i = 1; i < f.size(); ++i) r.push_back((int64_t)((__int128)f[i] * (i % p) % p));
  mp_trim(r);
  return r;
}

ModPoly mp_powmod(ModPoly base, Int e, const ModPoly& mod, int64_t p) {
  ModPoly r{1};
  base = mp_rem(std::move(base), mod, p);
  while (e > 0) {
    if (mod_floor(e, 2) == 1) r = mp_rem(mp_mul(r, base, p), mod, p);
    base = mp_rem(mp_mul(base, base, p), mod, p);
    e = fdiv(e, 2);
  }
  return r;
}

struct Rng {
  uint64_t s;
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

// equal-degree splitting (Cantor-Zassenhaus), f squarefree product of
// irreducibles of degree d
void equal_degree(const ModPoly& f, int d, int64_t p, Rng& rng, std::vector<ModPoly>& out) {
  int n = (int)f.size() - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Int exp = (pow_int(Int(p), (unsigned long)d) - 1) / 2;
  while (true) {
    ModPoly h(n, 0);
    for (auto& c : h) c = (int64_t)(rng.next() % (uint64_t)p);
    mp_trim(h);
    if (h.size() < 2) continue;
    ModPoly g = mp_powmod(h, exp, f, p);
    if (g.empty()) continue;
    g[0] = (g[0] + p - 1) % p;
    mp_trim(g);
    ModPoly u = mp_gcd(f, g, p);
    if (u.size() > 1 && u.size() < f.size()) {
      equal_degree(u, d, p, rng, out);
      equal_degree(mp_divexact(f, u, p), d, p, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(ModPoly f, int64_t p) {
  // f monic squarefree mod p; distinct-degree then equal-degree
  std::vector<ModPoly> out;
  Rng rng{0x9e3779b97f4a7c15ull ^ (uint64_t)p};
  ModPoly xp{0, 1};
  ModPoly h = xp;  // x^(p^d) mod f, iterated
  int d = 0;
  while ((int)f.size() - 1 >= 2 * (d + 1)) {
    ++d;
    h = mp_powmod(h, Int(p), f, p);
    ModPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    mp_trim(diff);
    ModPoly g = mp_gcd(f, diff, p);
    if (g.size() > 1) {
      equal_degree(g, d, p, rng, out);
      f = mp_divexact(f, g, p);
      h = mp_rem(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting of a monic modular factorization

struct ZPoly {  // integer poly, ascending
  std::vector<Int> c;
  int deg() const { return (int)c.size() - 1; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  ZPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Int(0));
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

void z_mod_sym(ZPoly& f, const Int& m) {
  Int half = fdiv(m, 2);
  for (Int& c : f.c) {
    c = mod_floor(c, m);
    if (c > half) c -= m;
  }
  f.trim();
}

ZPoly from_mod(const ModPoly& f, int64_t p) {
  ZPoly r;
  for (size_t i = 0; i < f.size(); ++i) r.c.emplace_back((long)f[i]);
  Int ip(p), half = fdiv(ip, 2);
  for (Int& c : r.c)
    if (c > half) c -= ip;
  r.trim();
  return r;
}

ModPoly to_mod(const ZPoly& f, int64_t p) {
  ModPoly r;
  for (const Int& c : f.c) r.push_back(mod_floor(c, Int(p)).get_si());
  mp_trim(r);
  return r;
}

// division with remainder where divisor is monic, over Z/m implicitly
// (callers reduce afterwards)
std::pair<ZPoly, ZPoly> z_divmod_monic(ZPoly f, const ZPoly& g, const Int& m) {
  assert(mod_floor(g.c.back(), m) == 1 || g.c.back() == 1);
  ZPoly q;
  if (f.deg() >= g.deg()) q.c.assign(f.deg() - g.deg() + 1, Int(0));
  while (f.deg() >= g.deg()) {
    Int c = f.c.back();
    int k = f.deg() - g.deg();
    q.c[k] = c;
    for (int i = 0; i <= g.deg(); ++i) f.c[i + k] -= c * g.c[i];
    f.trim();
    z_mod_sym(f, m);
  }
  q.trim();
  return {q, f};
}

// lift f = g*h (mod p^k) to (mod p^{k+1}); f, g, h monic; sg + th = 1 (mod p)
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, const ZPoly& s, const ZPoly& t,
                 const Int& pk, int64_t p) {
  ZPoly e = z_sub(f, z_mul(g, h));
  for (Int& c : e.c) {
    assert(mod_floor(c, pk) == 0);
    c /= pk;
  }
  e.trim();
  Int ip(p);
  z_mod_sym(e, ip);
  // delta_g = (t*e) mod g ; delta_h = s*e + ((t*e) div g)*h, reduced mod p
  auto [q, dg] = z_divmod_monic(z_mul(t, e), g, ip);
  z_mod_sym(dg, ip);
  ZPoly dh = z_sub(ZPoly(), z_sub(ZPoly(), z_mul(s, e)));  // s*e
  dh = z_mul(s, e);
  ZPoly qh = z_mul(q, h);
  for (size_t i = 0; i < qh.c.size(); ++i) {
    if (dh.c.size() <= i) dh.c.resize(i + 1, Int(0));
    dh.c[i] += qh.c[i];
  }
  z_mod_sym(dh, ip);
  assert(dh.deg() < h.deg() || dh.c.empty());
  for (size_t i = 0; i < dg.c.size(); ++i) {
    if (g.c.size() <= i) g.c.resize(i + 1, Int(0));
    g.c[i] += pk * dg.c[i];
  }
  for (size_t i = 0; i < dh.c.size(); ++i) {
    if (h.c.size() <= i) h.c.resize(i + 1, Int(0));
    h.c[i] += pk * dh.c[i];
  }
}

// extended euclid mod p for monic-ish polys: s*g + t*h = 1
void bezout_mod(const ModPoly& g, const ModPoly& h, int64_t p, ZPoly& s_out, ZPoly& t_out) {
  ModPoly r0 = g, r1 = h;
  ModPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    // q, r = divmod(r0, r1)
    ModPoly q((r0.size() >= r1.size()) ? r0.size() - r1.size() + 1 : 0, 0);
    ModPoly rem = r0;
    int64_t inv = mod_inv(r1.back(), p);
    while (rem.size() >= r1.size()) {
      int64_t c = (int64_t)((__int128)rem.back() * inv % p);
      size_t k = rem.size() - r1.size();
      q[k] = c;
      for (size_t i = 0; i < r1.size(); ++i)
        rem[i + k] = (rem[i + k] - (int64_t)((__int128)c * r1[i] % p) % p + p) % p;
      mp_trim(rem);
    }
    mp_trim(q);
    auto comb = [&](const ModPoly& a0, const ModPoly& a1) {
      ModPoly qa = mp_mul(q, a1, p);
      ModPoly r = a0;
      if (r.size() < qa.size()) r.resize(qa.size(), 0);
      for (size_t i = 0; i < qa.size(); ++i) r[i] = (r[i] - qa[i] % p + p) % p;
      mp_trim(r);
      return r;
    };
    ModPoly s2 = comb(s0, s1), t2 = comb(t0, t1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd (a unit); normalize to 1
  assert(r0.size() == 1);
  int64_t inv = mod_inv(r0[0], p);
  for (auto& c : s0) c = (int64_t)((__int128)c * inv % p);
  for (auto& c : t0) c = (int64_t)((__int128)c * inv % p);
  s_out = from_mod(s0, p);
  t_out = from_mod(t0, p);
}

// lift the whole list: F monic = prod(mods) mod p, to mod p^K (cascade)
void hensel_lift_list(const ZPoly& F, std::vector<ZPoly>& factors, int64_t p, int K) {
  if (factors.size() <= 1) {
    if (!factors.empty()) factors[0] = F;
    return;
  }
  // split off the first factor
  ZPoly g = factors[0];
  ModPoly hm{1};
  for (size_t i = 1; i < factors.size(); ++i) hm = mp_mul(hm, to_mod(factors[i], p), p);
  ZPoly h = from_mod(hm, p);
  ZPoly s, t;
  bezout_mod(to_mod(g, p), hm, p, s, t);
  Int pk(p);
  for (int k = 1; k < K; ++k) {
    hensel_step(F, g, h, s, t, pk, p);
    pk *= p;
  }
  Int pK = pk;
  z_mod_sym(g, pK);
  z_mod_sym(h, pK);
  factors[0] = g;
  std::vector<ZPoly> rest(factors.begin() + 1, factors.end());
  hensel_lift_list(h, rest, p, K);
  for (size_t i = 1; i < factors.size(); ++i) factors[i] = rest[i - 1];
}

// trial division over Z (arguments monic here, so an exact rational
// quotient is automatically integral)
bool z_divides(const ZPoly& f, const ZPoly& g, ZPoly* quot) {
  Poly pf = from_integer({std::vector<Int>(f.c)});
  Poly pg = from_integer({std::vector<Int>(g.c)});
  auto [q, r] = divmod(pf, pg);
  if (!r.is_zero()) return false;
  if (quot) {
    ZPoly z;
    for (const Rat& c : q.c) {
      if (!is_integer(c)) return false;
      z.c.push_back(num(c));
    }
    *quot = z;
  }
  return true;
}

std::vector<ZPoly> factor_monic_squarefree(ZPoly F) {
  int n = F.deg();
  if (n <= 1) return {F};
  // choose a prime keeping F squarefree
  static const int64_t primes[] = {127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
                                   191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
                                   257, 263, 269, 271, 277, 281, 283, 293, 307, 311, 313, 317};
  int64_t p = 0;
  ModPoly Fp;
  for (int64_t cand : primes) {
    Fp = to_mod(F, cand);
    if ((int)Fp.size() - 1 != n) continue;  // monic: lead = 1, never vanishes, but be safe
    ModPoly g = mp_gcd(Fp, mp_deriv(Fp, cand), cand);
    if (g.size() == 1) {
      p = cand;
      break;
    }
  }
  if (p == 0) throw std::logic_error("factor: no good prime in table");
  // normalize monic mod p
  {
    int64_t inv = mod_inv(Fp.back(), p);
    for (auto& c : Fp) c = (int64_t)((__int128)c * inv % p);
  }
  std::vector<ModPoly> mods = factor_mod_p(Fp, p);
  if (mods.size() == 1) return {F};
  std::sort(mods.begin(), mods.end());
  // Mignotte-style bound: |coeff of factor| <= 2^n * sqrt(n+1) * H(F)
  Int H = 0;
  for (const Int& c : F.c) { Int a = abs(c); if (a > H) H = a; }
  Int bound = pow_int(Int(2), (unsigned long)n) * (isqrt(Int(n + 1)) + 1) * H;
  int K = 1;
  Int pK(p);
  while (pK <= 2 * bound) {
    pK *= p;
    ++K;
  }
  std::vector<ZPoly> lifted;
  for (const ModPoly& m : mods) lifted.push_back(from_mod(m, p));
  hensel_lift_list(F, lifted, p, K);

  // subset recombination
  std::vector<ZPoly> out;
  std::vector<int> alive(lifted.size(), 1);
  ZPoly rem = F;
  int live = (int)lifted.size();
  for (int card = 1; card <= live; ++card) {
    bool restart = true;
    while (restart) {
      restart = false;
      std::vector<int> idx;
      for (size_t i = 0; i < lifted.size(); ++i)
        if (alive[i]) idx.push_back((int)i);
      if (card > (int)idx.size()) break;
      std::vector<int> sel(card);
      for (int i = 0; i < card; ++i) sel[i] = i;
      while (true) {
        ZPoly cand{{Int(1)}};
        for (int i : sel) cand = z_mul(cand, lifted[idx[i]]);
        z_mod_sym(cand, pK);
        ZPoly q;
        if (cand.deg() <= rem.deg() && z_divides(rem, cand, &q)) {
          out.push_back(cand);
          rem = q;
          for (int i : sel) alive[idx[i]] = 0;
          live -= card;
          restart = true;
          break;
        }
        // next combination
        int i = card - 1;
        while (i >= 0 && sel[i] == (int)idx.size() - card + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < card; ++j) sel[j] = sel[j - 1] + 1;
      }
      if (live == 0) break;
    }
    if (live == 0) break;
  }
  if (rem.deg() > 0) out.push_back(rem);
  return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor_poly(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (f.deg() < 1) return out;
  for (auto& [part, mult] : squarefree_decompose(f)) {
    auto [cont, ip] = to_integer(part);
    (void)cont;
    // monicize: G(x) = l^(n-1) g(x/l) is monic with integer coefficients
    Int l = ip.c.back();
    ZPoly G;
    int n = ip.deg();
    G.c.resize(n + 1);
    // G(x) = l^(n-1) g(x/l): coefficient of x^i is a_i l^(n-1-i)
    for (int i = 0; i < n; ++i) G.c[i] = ip.c[i] * pow_int(l, (unsigned long)(n - 1 - i));
    G.c[n] = 1;
    for (auto& zf : factor_monic_squarefree(G)) {
      // map back: factor of g is primitive part of zf(l x)
      Poly back;
      back.c.resize(zf.c.size());
      Int li = 1;
      for (size_t i = 0; i < zf.c.size(); ++i) {
        back.c[i] = Rat(zf.c[i] * li);
        li *= l;
      }
      back.trim();
      out.emplace_back(back.monic(), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    for (int i = a.first.deg(); i >= 0; --i)
      if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
    return a.second < b.second;
  });
  return out;
}

}  // namespace k3fib

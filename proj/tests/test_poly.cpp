#include "doctest.h"

#include <random>

#include "k3fib/poly.hpp"
#include "k3fib/ratfunc.hpp"

using namespace k3fib;

TEST_CASE("poly arithmetic basics") {
  Poly f = Poly::from({1, 2, 1});  // (1+t)^2
  Poly g = Poly::from({1, 1});
  CHECK(g * g == f);
  CHECK(f.deg() == 2);
  CHECK(Poly().deg() == -1);
  auto [q, r] = divmod(f, g);
  CHECK(q == g);
  CHECK(r.is_zero());
  CHECK(gcd_poly(f, g) == g);
  CHECK(f.eval(Rat(2)) == 9);
  CHECK(f.derivative() == Poly::from({2, 2}));
}

TEST_CASE("valuation") {
  Poly t = Poly::x();
  Poly f = t * t * (t - Poly::from({2})) * (t - Poly::from({2}));
  CHECK(valuation(f, t) == 2);
  CHECK(valuation(f, Poly::from({-2, 1})) == 2);
  CHECK(valuation(f, Poly::from({1, 1})) == 0);
}

TEST_CASE("squarefree decomposition") {
  Poly t = Poly::x();
  Poly f = t * t * t * (t + Poly::from({1})) * (t * t + Poly::from({1}));
  auto parts = squarefree_decompose(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].second == 1);
  CHECK(parts[0].first == (t + Poly::from({1})) * (t * t + Poly::from({1})));
  CHECK(parts[1].second == 3);
  CHECK(parts[1].first == t);
}

TEST_CASE("factorization fixtures from the catalog discriminants") {
  SUBCASE("t^6 - 5t^4 + 39t^2 + 2 is irreducible") {
    Poly f = Poly::from({2, 0, 39, 0, -5, 0, 1});
    auto fs = factor_poly(f);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first.deg() == 6);
    CHECK(fs[0].second == 1);
  }
  SUBCASE("(x^2+2)(x^2+x+7)(x^2-x+7)") {
    Poly f = Poly::from({1, 0, 2}) * Poly::from({7, 1, 1}) * Poly::from({7, -1, 1});
    auto fs = factor_poly(f);
    REQUIRE(fs.size() == 3);
    for (auto& [p, m] : fs) {
      CHECK(p.deg() == 2);
      CHECK(m == 1);
    }
  }
  SUBCASE("16l^5 - 32l^4 - 24l^3 - 23l^2 + 12l - 2 is irreducible") {
    Poly f = Poly::from({-2, 12, -23, -24, -32, 16});
    auto fs = factor_poly(f);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first.deg() == 5);
  }
  SUBCASE("splitting with multiplicities and linear factors") {
    Poly t = Poly::x();
    Poly f = (t - Poly::from({3})) * (t - Poly::from({3})) * Poly::from({1, 0, 1}) *
             Poly::from({-1, 2});
    auto fs = factor_poly(f);
    REQUIRE(fs.size() == 3);
    // sorted by (degree, coefficients): (t-3)^2, (t-1/2), (t^2+1)
    CHECK(fs[0].first == Poly::from({-3, 1}));
    CHECK(fs[0].second == 2);
    CHECK(fs[1].first == Poly::from_rats({Rat(-1, 2), Rat(1)}));
    CHECK(fs[1].second == 1);
    CHECK(fs[2].first == Poly::from({1, 0, 1}));
    CHECK(fs[2].second == 1);
  }
  SUBCASE("27h^2 - 446h + 27 irreducible over Q") {
    auto fs = factor_poly(Poly::from({27, -446, 27}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first.deg() == 2);
  }
  SUBCASE("2n^6 - 9n^4 - 17n^2 + 125") {
    auto fs = factor_poly(Poly::from({125, 0, -17, 0, -9, 0, 2}));
    int total = 0;
    for (auto& [p, m] : fs) total += p.deg() * m;
    CHECK(total == 6);
  }
}

TEST_CASE("factor-product round trip on random polynomials") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-5, 5), degd(1, 3);
  for (int iter = 0; iter < 60; ++iter) {
    // random product of small factors
    Poly f = Poly::from({1});
    for (int k = 0; k < 3; ++k) {
      Poly g;
      int d = degd(rng);
      for (int i = 0; i <= d; ++i) g.c.emplace_back(coeff(rng));
      g.trim();
      if (g.deg() < 1) g = Poly::from({1, 1});
      f = f * g;
    }
    auto fs = factor_poly(f);
    Poly prod = Poly(Rat(f.lead()));
    for (auto& [p, m] : fs)
      for (int i = 0; i < m; ++i) prod = prod * p;
    CHECK(prod == f.monic() * f.lead());
  }
}

TEST_CASE("rational functions") {
  RatFunc t = RatFunc::t();
  RatFunc f = (t * t - RatFunc(Rat(1))) / (t - RatFunc(Rat(1)));
  CHECK(f.is_poly());  // reduces to t + 1
  CHECK(f.as_poly() == Poly::from({1, 1}));
  RatFunc g = RatFunc(Rat(1)) / t;
  CHECK(g.val(Poly::x()) == -1);
  CHECK((t * t).val(Poly::x()) == 2);
  // denominator stays monic
  RatFunc h = RatFunc(Poly::from({1}), Poly::from({0, 2}));
  CHECK(h.den == Poly::x());
  CHECK(h.num == Poly::from_rats({Rat(1, 2)}));
  // flip: f(1/u) u^k
  RatFunc p = RatFunc(Poly::from({0, 0, 3}));  // 3t^2
  RatFunc flipped = p.flip(2);                 // 3
  CHECK(flipped.is_poly());
  CHECK(flipped.as_poly() == Poly::from({3}));
}

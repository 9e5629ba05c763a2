#include "doctest.h"

#include <random>

#include "k3fib/matrix.hpp"

using namespace k3fib;

namespace {

IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  IntMat m((int)rows.size(), (int)rows.begin()->size());
  int i = 0;
  for (auto& r : rows) {
    int j = 0;
    for (long v : r) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("smith normal form basics") {
  SUBCASE("identity") {
    SmithResult s = smith_normal_form(IntMat::identity(3));
    CHECK(s.invariant_factors() == std::vector<Int>{1, 1, 1});
  }
  SUBCASE("gram of A1") {
    IntMat m = from_rows({{-2}});
    SmithResult s = smith_normal_form(m);
    CHECK(s.invariant_factors() == std::vector<Int>{2});
  }
  SUBCASE("transcendental lattice diag(2,4)") {
    IntMat m = from_rows({{2, 0}, {0, 4}});
    SmithResult s = smith_normal_form(m);
    CHECK(s.invariant_factors() == std::vector<Int>{2, 4});
  }
}

TEST_CASE("smith normal form round trip on random matrices") {
  // property suite: u*m*v = d exactly, divisibility chain, and
  // |det| = product of invariant factors for square nonsingular inputs
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int iter = 0; iter < 1200; ++iter) {
    int r = dim(rng), c = dim(rng);
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = entry(rng);
    SmithResult s = smith_normal_form(m);
    CHECK(mul(mul(s.u, m), s.v) == s.d);
    CHECK(abs(det(s.u)) == 1);
    CHECK(abs(det(s.v)) == 1);
    std::vector<Int> f = s.invariant_factors();
    for (size_t i = 0; i + 1 < f.size(); ++i) CHECK(mod_floor(f[i + 1], f[i]) == 0);
    for (int i = 0; i < s.d.rows; ++i)
      for (int j = 0; j < s.d.cols; ++j)
        if (i != j) CHECK(s.d.at(i, j) == 0);
    if (r == c) {
      Int prod = 1;
      for (const Int& x : f) prod *= x;
      if ((int)f.size() < r) prod = 0;
      CHECK(abs(det(m)) == prod);
    }
  }
}

TEST_CASE("rational kernel") {
  SUBCASE("zero matrix has full kernel") {
    RatMat m(2, 2);
    CHECK(rational_kernel(m).size() == 2);
  }
  SUBCASE("full rank has empty kernel") {
    RatMat m(2, 2);
    m.at(0, 0) = 1;
    m.at(1, 1) = 3;
    CHECK(rational_kernel(m).empty());
  }
  SUBCASE("single equation in 8 variables") {
    RatMat m(1, 8);
    for (int j = 0; j < 8; ++j) m.at(0, j) = j + 1;
    auto k = rational_kernel(m);
    CHECK(k.size() == 7);
    for (auto& v : k) CHECK(dot(m.row(0), v) == 0);
  }
}

TEST_CASE("saturate") {
  SUBCASE("scaling") {
    std::vector<RatVec> sub{{Rat(2), Rat(0)}};
    auto s = saturate(sub, 2);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == std::vector<Int>{1, 0});
  }
  SUBCASE("index-2 sublattice of Z^2") {
    std::vector<RatVec> sub{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
    auto s = saturate(sub, 2);
    REQUIRE(s.size() == 2);
    IntMat m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.at(i, j) = s[i][j];
    CHECK(abs(det(m)) == 1);
  }
}

TEST_CASE("saturate properties on random subspaces") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6), denq(1, 4);
  for (int iter = 0; iter < 1000; ++iter) {
    int n = dim(rng) + 1;
    int k = 1 + (int)(rng() % n);
    std::vector<RatVec> sub;
    for (int i = 0; i < k; ++i) {
      RatVec v(n);
      for (int j = 0; j < n; ++j) v[j] = Rat(entry(rng), denq(rng));
      for (Rat& x : v) x.canonicalize();
      sub.push_back(v);
    }
    auto s1 = saturate(sub, n);
    RatMat m1((int)sub.size(), n);
    for (int i = 0; i < m1.rows; ++i) m1.set_row(i, sub[i]);
    RatMat m2((int)s1.size(), n);
    for (int i = 0; i < m2.rows; ++i)
      for (int j = 0; j < n; ++j) m2.at(i, j) = Rat(s1[i][j]);
    CHECK((int)s1.size() == rank_of(m1));
    RatMat stacked(m1.rows + m2.rows, n);
    for (int i = 0; i < m1.rows; ++i) stacked.set_row(i, m1.row(i));
    for (int i = 0; i < m2.rows; ++i) stacked.set_row(m1.rows + i, m2.row(i));
    CHECK(rank_of(stacked) == rank_of(m1));
    // idempotence
    std::vector<RatVec> rows2;
    for (auto& r : s1) rows2.emplace_back(r.begin(), r.end());
    auto s2 = saturate(rows2, n);
    CHECK(s1 == s2);
  }
}

TEST_CASE("integer combination solver") {
  IntMat rows = from_rows({{2, 0, 1}, {0, 3, 1}});
  auto sol = solve_integer_combination(rows, {2, 3, 2});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] * 2 == 2);
  CHECK((*sol)[1] * 3 == 3);
  CHECK_FALSE(solve_integer_combination(rows, {1, 0, 0}).has_value());
}

TEST_CASE("hnf row basis is canonical") {
  IntMat m = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  IntMat h1 = hnf_rows(m);
  IntMat m2 = from_rows({{10, 4, 16}, {2, 4, 4}, {-4, 10, 16}});  // same row lattice
  IntMat h2 = hnf_rows(m2);
  CHECK(h1 == h2);
}

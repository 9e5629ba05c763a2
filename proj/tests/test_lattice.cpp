#include "doctest.h"

#include <set>

#include "k3fib/enumerate.hpp"
#include "k3fib/lattice.hpp"
#include "k3fib/rootdata.hpp"

using namespace k3fib;

namespace {

// Independent enumeration oracle: count norm-2 vectors straight from the
// coordinate descriptions of section 4, without the library's enumerator.
long oracle_roots_A(int n) {
  // integer vectors in R^{n+1}, coordinate sum 0, norm 2 => eps_i - eps_j
  long count = 0;
  std::vector<int> v(n + 1, 0);
  // brute force over {-2..2}^(n+1) for small n
  long total = 1;
  for (int i = 0; i <= n; ++i) total *= 5;
  for (long code = 0; code < total; ++code) {
    long c = code;
    int sum = 0, norm = 0;
    for (int i = 0; i <= n; ++i) {
      int x = int(c % 5) - 2;
      c /= 5;
      sum += x;
      norm += x * x;
    }
    if (sum == 0 && norm == 2) ++count;
  }
  return count;
}

long oracle_roots_D(int n) {
  // integer vectors with even coordinate sum, norm 2
  long count = 0;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 5;
  for (long code = 0; code < total; ++code) {
    long c = code;
    int sum = 0, norm = 0;
    for (int i = 0; i < n; ++i) {
      int x = int(c % 5) - 2;
      c /= 5;
      sum += x;
      norm += x * x;
    }
    if (sum % 2 == 0 && norm == 2) ++count;
  }
  return count;
}

long oracle_roots_E8() {
  // xi_i in (1/2)Z, xi_i - xi_j in Z, sum in 2Z, |xi|^2 = 2
  long count = 0;
  for (long code = 0; code < 390625; ++code) {  // {-2..2}^8 in half-integer steps of 1/2: use {-1,-1/2,0,1/2,1}
    long c = code;
    int num2 = 0;  // numerators over 2
    int sum2 = 0;
    long norm4 = 0;
    bool all_int = true, all_half = true;
    for (int i = 0; i < 8; ++i) {
      int x2 = int(c % 5) - 2;  // coordinate * 2 in {-2..2}
      c /= 5;
      if (x2 % 2 != 0) all_int = false;
      if (x2 % 2 == 0) all_half = false;
      sum2 += x2;
      norm4 += x2 * x2;
      (void)num2;
    }
    bool coherent = all_int || all_half;  // xi_i - xi_j integral
    if (coherent && norm4 == 8 && sum2 % 4 == 0) ++count;
  }
  return count;
}

Lattice scaled_lattice(long n) {
  Lattice L;
  L.rank = 1;
  L.gram = IntMat(1, 1);
  L.gram.at(0, 0) = n;
  return L;
}

}  // namespace

TEST_CASE("glue vector q and b values match the closed forms") {
  for (int l = 1; l <= 17; ++l) {
    RootLattice A = make_root_lattice('A', l);
    RatMat G = RatMat::from_int(A.lattice.gram);
    CHECK(q_mod2(bilinear(G, A.glue_vec("alpha"), A.glue_vec("alpha"))) == Rat(-l, l + 1));
  }
  for (int l = 4; l <= 24; ++l) {
    RootLattice D = make_root_lattice('D', l);
    RatMat G = RatMat::from_int(D.lattice.gram);
    Rat ql = Rat(-l, 4);
    ql.canonicalize();
    CHECK(q_mod2(bilinear(G, D.glue_vec("delta"), D.glue_vec("delta"))) == q_mod2(ql));
    CHECK(q_mod2(bilinear(G, D.glue_vec("deltabar"), D.glue_vec("deltabar"))) == Rat(-1));
    CHECK(b_mod1(bilinear(G, D.glue_vec("delta"), D.glue_vec("deltabar"))) == Rat(-1, 2));
    if (l % 2 == 0)
      CHECK(q_mod2(bilinear(G, D.glue_vec("deltatilde"), D.glue_vec("deltatilde"))) == q_mod2(ql));
  }
  RootLattice E6 = make_root_lattice('E', 6);
  RatMat G6 = RatMat::from_int(E6.lattice.gram);
  CHECK(q_mod2(bilinear(G6, E6.glue_vec("eta6"), E6.glue_vec("eta6"))) == Rat(-4, 3));
  RootLattice E7 = make_root_lattice('E', 7);
  RatMat G7 = RatMat::from_int(E7.lattice.gram);
  CHECK(q_mod2(bilinear(G7, E7.glue_vec("eta7"), E7.glue_vec("eta7"))) == Rat(-3, 2));
}

TEST_CASE("root counts match the enumeration oracle and Weyl theory") {
  CHECK(oracle_roots_A(2) == 6);
  CHECK((long)roots(make_root_lattice('A', 2).lattice).size() == 6);
  CHECK(oracle_roots_A(4) == theoretical_root_count({'A', 4}));
  CHECK(oracle_roots_D(4) == theoretical_root_count({'D', 4}));
  CHECK(oracle_roots_D(5) == theoretical_root_count({'D', 5}));
  CHECK(oracle_roots_E8() == 240);
  CHECK((long)roots(make_root_lattice('E', 8).lattice).size() == 240);

  for (auto t : {DynkinType{'A', 1}, DynkinType{'A', 7}, DynkinType{'D', 4}, DynkinType{'D', 10},
                 DynkinType{'E', 6}, DynkinType{'E', 7}}) {
    RootLattice R = make_root_lattice(t.family, t.n);
    CHECK((long)roots(R.lattice).size() == theoretical_root_count(t));
  }
  // rank-1 lattice <-4> has no roots
  CHECK(roots(scaled_lattice(-4)).empty());
}

TEST_CASE("serial and parallel enumeration agree") {
  for (auto t : {DynkinType{'D', 12}, DynkinType{'E', 8}, DynkinType{'A', 9}}) {
    Lattice L = make_root_lattice(t.family, t.n).lattice;
    IntMat neg(L.rank, L.rank);
    for (int i = 0; i < L.rank; ++i)
      for (int j = 0; j < L.rank; ++j) neg.at(i, j) = -L.gram.at(i, j);
    auto a = short_vectors_serial(neg, 2);
    auto b = short_vectors(neg, 2, 4);
    CHECK(a == b);
    auto c = short_vectors_serial(neg, 4);
    auto d = short_vectors(neg, 4, 3);
    CHECK(c == d);
  }
}

TEST_CASE("discriminant groups of the root lattices") {
  SUBCASE("E8 trivial") {
    auto g = discriminant_group(make_root_lattice('E', 8).lattice);
    CHECK(g.invariant_factors.empty());
    CHECK(g.order() == 1);
  }
  SUBCASE("E7 is Z/2 with q = -3/2") {
    auto g = discriminant_group(make_root_lattice('E', 7).lattice);
    CHECK(g.invariant_factors == std::vector<Int>{2});
    CHECK(g.q_values[0] == Rat(-3, 2));
  }
  SUBCASE("E6 is Z/3 with q = -4/3") {
    auto g = discriminant_group(make_root_lattice('E', 6).lattice);
    CHECK(g.invariant_factors == std::vector<Int>{3});
    CHECK(g.q_values[0] == Rat(-4, 3));  // both nontrivial classes have q = -4/3
  }
  SUBCASE("A_l is Z/(l+1)") {
    for (int l = 1; l <= 9; ++l) {
      auto g = discriminant_group(make_root_lattice('A', l).lattice);
      CHECK(g.invariant_factors == std::vector<Int>{l + 1});
    }
  }
  SUBCASE("D_l even is (Z/2)^2, D_l odd is Z/4") {
    auto even = discriminant_group(make_root_lattice('D', 8).lattice);
    CHECK(even.invariant_factors == std::vector<Int>{2, 2});
    auto odd = discriminant_group(make_root_lattice('D', 9).lattice);
    CHECK(odd.invariant_factors == std::vector<Int>{4});
  }
}

TEST_CASE("classify_roots recovers the constructed type") {
  for (auto t : {DynkinType{'A', 1}, DynkinType{'A', 5}, DynkinType{'D', 4}, DynkinType{'D', 7},
                 DynkinType{'E', 6}, DynkinType{'E', 7}, DynkinType{'E', 8}}) {
    RootSystemDecomposition dec = classify_roots(make_root_lattice(t.family, t.n).lattice);
    REQUIRE(dec.components.size() == 1);
    CHECK(dec.components[0].type == t);
  }
}

TEST_CASE("orthogonal complements from proposition 4") {
  SUBCASE("full lattice -> zero lattice") {
    Lattice L = make_root_lattice('A', 3).lattice;
    Lattice S = L;
    S.ambient = RatMat::identity(3);
    CHECK(orthogonal_complement(L, S).rank == 0);
  }
  SUBCASE("(A1)-perp in E8 is E7") {
    Lattice E8 = make_root_lattice('E', 8).lattice;
    Lattice A1;
    A1.rank = 1;
    A1.gram = IntMat(1, 1);
    A1.gram.at(0, 0) = -2;
    RatMat amb(1, 8);
    amb.at(0, 0) = 1;  // e1
    A1.ambient = amb;
    Lattice C = orthogonal_complement(E8, A1);
    CHECK(C.rank == 7);
    auto dec = classify_roots(C);
    REQUIRE(dec.components.size() == 1);
    CHECK(dec.components[0].type == DynkinType{'E', 7});
    CHECK(abs(det(C.gram)) == 2);
  }
  SUBCASE("(D5)-perp in E8 is A3") {
    Lattice E8 = make_root_lattice('E', 8).lattice;
    Lattice D5;
    D5.rank = 5;
    D5.gram = IntMat(5, 5);
    RatMat amb(5, 8);
    // (e1, e3, e4, e5, e2)
    int idx[5] = {0, 2, 3, 4, 1};
    for (int i = 0; i < 5; ++i) amb.at(i, idx[i]) = 1;
    D5.ambient = amb;
    RatMat G = RatMat::from_int(E8.gram);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) D5.gram.at(i, j) = num(bilinear(G, amb.row(i), amb.row(j)));
    Lattice C = orthogonal_complement(E8, D5);
    CHECK(C.rank == 3);
    auto dec = classify_roots(C);
    REQUIRE(dec.components.size() == 1);
    CHECK(dec.components[0].type == DynkinType{'A', 3});
  }
  SUBCASE("(A1 = <d_l>)-perp in D_l is A1 + D_{l-2}") {
    for (int l : {5, 6, 8}) {
      Lattice Dl = make_root_lattice('D', l).lattice;
      Lattice A1;
      A1.rank = 1;
      A1.gram = IntMat(1, 1);
      A1.gram.at(0, 0) = -2;
      RatMat amb(1, l);
      amb.at(0, l - 1) = 1;
      A1.ambient = amb;
      auto dec = classify_roots(orthogonal_complement(Dl, A1));
      REQUIRE(dec.components.size() == 2);
      std::multiset<std::string> got{dec.components[0].type.str(), dec.components[1].type.str()};
      std::string dk = (l - 2 == 3) ? "A3" : "D" + std::to_string(l - 2);
      CHECK(got == std::multiset<std::string>{"A1", dk});
    }
  }
  SUBCASE("(A1)-perp in A7 has root part A5 and det 16") {
    Lattice A7 = make_root_lattice('A', 7).lattice;
    Lattice A1;
    A1.rank = 1;
    A1.gram = IntMat(1, 1);
    A1.gram.at(0, 0) = -2;
    RatMat amb(1, 7);
    amb.at(0, 6) = 1;  // a_7
    A1.ambient = amb;
    Lattice C = orthogonal_complement(A7, A1);
    CHECK(C.rank == 6);
    CHECK(abs(det(C.gram)) == 16);
    auto dec = classify_roots(C);
    REQUIRE(dec.components.size() == 1);
    CHECK(dec.components[0].type == DynkinType{'A', 5});
  }
}

TEST_CASE("orthogonal complement output is primitive") {
  Lattice E8 = make_root_lattice('E', 8).lattice;
  Lattice A1;
  A1.rank = 1;
  A1.gram = IntMat(1, 1);
  A1.gram.at(0, 0) = -2;
  RatMat amb(1, 8);
  amb.at(0, 0) = 1;
  A1.ambient = amb;
  Lattice C = orthogonal_complement(E8, A1);
  CHECK(is_primitive(C));
  // det S = det S-perp for primitive S in unimodular L (lemma 2)
  CHECK(abs(det(C.gram)) == abs(det(A1.gram)));
}

TEST_CASE("is_primitive") {
  IntMat doubled(1, 1);
  doubled.at(0, 0) = 2;
  CHECK_FALSE(is_primitive(doubled));
  IntMat canon(1, 5);  // a_5 inside A5
  canon.at(0, 4) = 1;
  CHECK(is_primitive(canon));
}

TEST_CASE("overlattice from glue") {
  SUBCASE("empty glue returns L") {
    Lattice A2 = make_root_lattice('A', 2).lattice;
    Overlattice o = overlattice_from_glue(A2, {});
    CHECK(o.lattice.gram == A2.gram);
  }
  SUBCASE("E7 + A1 glued inside E8: det drops 4 -> index-2 overlattice") {
    // build E7+A1 abstractly and glue by eta7 + alpha1
    RootLattice E7 = make_root_lattice('E', 7);
    RootLattice A1 = make_root_lattice('A', 1);
    Lattice sum;
    sum.rank = 8;
    sum.gram = IntMat(8, 8);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) sum.gram.at(i, j) = E7.lattice.gram.at(i, j);
    sum.gram.at(7, 7) = -2;
    RatVec glue(8);
    for (int i = 0; i < 7; ++i) glue[i] = E7.glue_vec("eta7")[i];
    glue[7] = Rat(1, 2);
    CHECK(abs(det(sum.gram)) == 4);
    Overlattice o = overlattice_from_glue(sum, {glue});
    CHECK(abs(det(o.lattice.gram)) == 1);
    CHECK(o.lattice.is_even());
  }
  SUBCASE("D16 with delta glue is even unimodular") {
    RootLattice D16 = make_root_lattice('D', 16);
    Overlattice o = overlattice_from_glue(D16.lattice, {D16.glue_vec("delta")});
    CHECK(abs(det(o.lattice.gram)) == 1);
    CHECK(o.lattice.is_even());
  }
  SUBCASE("non-isotropic glue rejected") {
    RootLattice D10 = make_root_lattice('D', 10);
    CHECK_THROWS_AS(overlattice_from_glue(D10.lattice, {D10.glue_vec("deltabar")}),
                    std::domain_error);
  }
}

TEST_CASE("det multiplies by index squared under glue") {
  // A8 + 3*alpha8 is an index-3 overlattice (even unimodular rank 8 = E8)
  RootLattice A8 = make_root_lattice('A', 8);
  RatVec g = A8.glue_vec("alpha");
  for (Rat& x : g) x *= 3;
  Overlattice o = overlattice_from_glue(A8.lattice, {g});
  CHECK(abs(det(A8.lattice.gram)) == abs(det(o.lattice.gram)) * 9);
  auto dec = classify_roots(o.lattice);
  REQUIRE(dec.components.size() == 1);
  CHECK(dec.components[0].type == DynkinType{'E', 8});
}

TEST_CASE("lattice json round trip") {
  Lattice L = make_root_lattice('A', 3).lattice;
  L.label = "A3";
  RatMat amb(3, 5);
  amb.at(0, 0) = Rat(1, 2);
  L.ambient = amb;
  Lattice back = lattice_from_json(lattice_to_json(L));
  CHECK(back.label == L.label);
  CHECK(back.gram == L.gram);
  REQUIRE(back.ambient.has_value());
  CHECK(back.ambient->at(0, 0) == Rat(1, 2));
}

#include "doctest.h"

#include "k3fib/niemeier.hpp"

using namespace k3fib;

TEST_CASE("the table lists 24 lattices with total root rank 24 or Leech") {
  const auto& all = all_niemeier();
  CHECK(all.size() == 24);
  int with_glue = 0;
  for (const auto& n : all) {
    int rank = 0;
    for (auto t : n.root_components) rank += t.n;
    if (n.id == "Leech")
      CHECK(rank == 0);
    else
      CHECK(rank == 24);
    if (n.has_explicit_glue) ++with_glue;
  }
  CHECK(with_glue == 13);  // Prop 2's eleven plus D24 and D12^2
}

TEST_CASE("glue structures from the classification table") {
  CHECK(niemeier_by_id("E8^3").glue_structure.empty());
  CHECK(niemeier_by_id("D9+A15").glue_structure == std::vector<Int>{8});
  CHECK(niemeier_by_id("A11+E6+D7").glue_structure == std::vector<Int>{12});
  CHECK(niemeier_by_id("D6+A9^2").glue_structure == std::vector<Int>{2, 10});
  CHECK(niemeier_by_id("D5^2+A7^2").glue_structure == std::vector<Int>{4, 8});
  CHECK(niemeier_by_id("A1^24").glue_structure == std::vector<Int>(12, Int(2)));
}

TEST_CASE("glue-group order squares to the root determinant") {
  for (const auto& n : all_niemeier()) {
    if (n.root_components.empty()) continue;
    Int root_det = 1;
    for (auto t : n.root_components) {
      switch (t.family) {
        case 'A': root_det *= t.n + 1; break;
        case 'D': root_det *= 4; break;
        case 'E': root_det *= t.n == 6 ? 3 : t.n == 7 ? 2 : 1; break;
      }
    }
    CHECK(n.glue_order() * n.glue_order() == root_det);
  }
}

TEST_CASE("realize: E8^3") {
  NiemeierRealization r = realize(niemeier_by_id("E8^3"));
  CHECK(abs(det(r.over.lattice.gram)) == 1);
  CHECK((long)roots(r.over.lattice, 2).size() == 720);
}

TEST_CASE("realize: E8+D16") {
  NiemeierRealization r = realize(niemeier_by_id("E8+D16"));
  CHECK(abs(det(r.over.lattice.gram)) == 1);
  CHECK(r.over.lattice.is_even());
}

TEST_CASE("realize: D5^2+A7^2 has glue group Z/4 x Z/8") {
  const NiemeierLattice& n = niemeier_by_id("D5^2+A7^2");
  NiemeierRealization r = realize(n);
  CHECK(abs(det(r.over.lattice.gram)) == 1);
  CHECK(n.glue_structure == std::vector<Int>{4, 8});
  // group structure recomputed from the realized basis
  IntMat rel(24, 24);
  Int den = 1;
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) den = lcm(den, k3fib::den(r.over.basis_in_L.at(i, j)));
  // [L : L_root] computed via SNF of L_root's coordinates in L's basis
  RatMat inv_rows(24, 24);
  for (int i = 0; i < 24; ++i) {
    RatVec e(24);
    e[i] = 1;
    inv_rows.set_row(i, express_in_basis(e, r.over.basis_in_L));
  }
  IntMat m(24, 24);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) {
      REQUIRE(is_integer(inv_rows.at(i, j)));
      m.at(i, j) = num(inv_rows.at(i, j));
    }
  auto f = smith_normal_form(m).invariant_factors();
  std::vector<Int> nontrivial;
  for (const Int& x : f)
    if (x > 1) nontrivial.push_back(x);
  CHECK(nontrivial == std::vector<Int>{4, 8});
}

TEST_CASE("realize rejects lattices without glue data") {
  CHECK_THROWS_AS(realize(niemeier_by_id("A24")), std::domain_error);
  CHECK_THROWS_AS(realize(niemeier_by_id("Leech")), std::domain_error);
}

TEST_CASE("full validation of all glue-equipped lattices") {
  for (const auto& n : all_niemeier()) {
    if (!n.has_explicit_glue) continue;
    INFO(n.id);
    auto fails = validate_niemeier(n, 2);
    for (const auto& f : fails) MESSAGE(n.id, ": ", f);
    CHECK(fails.empty());
  }
}

#include "doctest.h"

#include <map>
#include <set>

#include "k3fib/nishiyama.hpp"
#include "table1_fixture.hpp"

using namespace k3fib;

TEST_CASE("candidate embeddings per host") {
  CHECK(candidate_embeddings(niemeier_by_id("E8^3")).size() == 2);
  CHECK(candidate_embeddings(niemeier_by_id("E8+D16")).size() == 4);
  CHECK(candidate_embeddings(niemeier_by_id("E7^2+D10")).size() == 5);
  CHECK(candidate_embeddings(niemeier_by_id("E7+A17")).size() == 2);
  CHECK(candidate_embeddings(niemeier_by_id("D24")).size() == 1);
  CHECK(candidate_embeddings(niemeier_by_id("A11+E6+D7")).size() == 5);
  // A-type only hosts admit no D5
  CHECK(candidate_embeddings(niemeier_by_id("A8^3")).empty());
  CHECK(candidate_embeddings(niemeier_by_id("A24")).empty());
}

TEST_CASE("frame invariants and the worked examples") {
  SUBCASE("joint in E8 of E8+D16") {
    auto specs = candidate_embeddings(niemeier_by_id("E8+D16"));
    // find the joint-in-E8 spec
    const EmbeddingSpec* joint = nullptr;
    for (const auto& s : specs)
      if (s.kind == PlacementKind::Joint && s.d5_component == 0) joint = &s;
    REQUIRE(joint);
    Frame f = compute_frame(*joint);
    CHECK(f.W.rank == 18);
    CHECK(abs(det(f.W.gram)) == 8);
    CHECK(abs(det(f.N.gram)) == 32);  // det N = 8 x 4
    CHECK(f.wn_quotient == std::vector<Int>{2});
    auto types = f.W_root.types();
    REQUIRE(types.size() == 2);
    CHECK(types[0] == DynkinType{'A', 1});
    CHECK(types[1] == DynkinType{'D', 16});
    CHECK(f.torsion == std::vector<Int>{2});
    CHECK(f.mw_rank == 1);
  }
  SUBCASE("split A1<E7(1), D5<E7(2) in E7^2+D10") {
    auto specs = candidate_embeddings(niemeier_by_id("E7^2+D10"));
    const EmbeddingSpec* split = nullptr;
    for (const auto& s : specs)
      if (s.kind == PlacementKind::Split && s.d5_component == 0 && s.a1_component == 1)
        split = &s;
    REQUIRE(split);
    Frame f = compute_frame(*split);
    CHECK(abs(det(f.N.gram)) == 128);  // 8 x 4^2
    CHECK(f.wn_quotient == std::vector<Int>{2, 2});
    CHECK(abs(det(f.W.gram)) == 8);
  }
}

TEST_CASE("full enumeration reproduces the classification") {
  std::vector<FibrationRecord> got = enumerate_all(2);
  REQUIRE(got.size() == 30);

  std::map<int, int> rank_hist;
  for (const auto& r : got) rank_hist[r.mw_rank]++;
  CHECK(rank_hist[0] == 14);
  CHECK(rank_hist[1] == 13);
  CHECK(rank_hist[2] == 3);

  const auto& want = table1_rows();
  REQUIRE(want.size() == 30);
  for (size_t i = 0; i < 30; ++i) {
    INFO("row ", i, ": ", got[i].host_id, " | ", got[i].embedding);
    CHECK(got[i].host_id == want[i].host_id);
    CHECK(got[i].embedding == want[i].embedding);
    CHECK(got[i].fibers == want[i].fibers);
    CHECK(got[i].mw_rank == want[i].mw_rank);
    CHECK(got[i].torsion == want[i].torsion);
  }
}

TEST_CASE("torsion divides the host glue group order") {
  for (const auto& rec : enumerate_all(2)) {
    Int tord = 1;
    for (const Int& t : rec.torsion) tord *= t;
    Int gord = niemeier_by_id(rec.host_id).glue_order();
    CHECK(mod_floor(gord, tord) == 0);
  }
}

TEST_CASE("enumeration is deterministic across worker counts") {
  auto a = enumerate_all(1);
  auto b = enumerate_all(4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].host_id == b[i].host_id);
    CHECK(a[i].embedding == b[i].embedding);
    CHECK(a[i].fibers == b[i].fibers);
    CHECK(a[i].mw_rank == b[i].mw_rank);
    CHECK(a[i].torsion == b[i].torsion);
  }
}

TEST_CASE("weyl reflection orbit closure on small A and D lattices") {
  // every root is Weyl-equivalent to the canonical one: orbit of the last
  // simple root under reflections covers the whole root set
  for (auto t : {DynkinType{'A', 4}, DynkinType{'A', 6}, DynkinType{'D', 4}, DynkinType{'D', 6}}) {
    RootLattice R = make_root_lattice(t.family, t.n);
    auto all = roots(R.lattice);
    std::set<std::vector<Int>> all_set(all.begin(), all.end());
    std::set<std::vector<Int>> orbit;
    std::vector<std::vector<Int>> frontier;
    std::vector<Int> seed(t.n, 0);
    seed[t.n - 1] = 1;  // canonical a_n / d_l
    orbit.insert(seed);
    frontier.push_back(seed);
    RatMat G = RatMat::from_int(R.lattice.gram);
    while (!frontier.empty()) {
      auto v = frontier.back();
      frontier.pop_back();
      for (const auto& e : all) {
        // R_e(v) = v + b(v,e) e
        RatVec vr(v.begin(), v.end()), er(e.begin(), e.end());
        Rat b = bilinear(G, vr, er);
        std::vector<Int> w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] + num(b) * e[i];
        if (orbit.insert(w).second) frontier.push_back(w);
      }
    }
    CHECK(orbit == all_set);
  }
}

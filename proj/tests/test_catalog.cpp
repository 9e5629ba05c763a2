#include "doctest.h"

#include "k3fib/report.hpp"

using namespace k3fib;

TEST_CASE("builtin catalog loads with 30 entries") {
  auto entries = load_catalog();
  REQUIRE(entries.size() == 30);
  for (size_t i = 0; i < entries.size(); ++i) CHECK(entries[i].id == (int)i + 1);
  const CatalogEntry* t = find_entry(entries, "t");
  REQUIRE(t);
  CHECK(t->id == 14);
  CHECK(t->model.a4 == Poly::from({0, 0, 0, 0, 1}));
  const CatalogEntry* one = find_entry(entries, "1");
  REQUIRE(one);
  CHECK(one->letter == "s");
  CHECK(one->expected_torsion == std::vector<Int>{8});
  CHECK(find_entry(entries, "999") == nullptr);
}

TEST_CASE("schema violations carry the ordinal and field path") {
  CHECK_THROWS_WITH_AS(parse_catalog(R"({"schema":"bogus","entries":[]})"),
                       "catalog schema must be k3fib-catalog/1", std::invalid_argument);
  std::string broken = R"({"schema":"k3fib-catalog/1","entries":[
    {"id": 7, "letter": "w", "a": {"a1": ["1","x"]}, "fibers": []}]})";
  try {
    parse_catalog(broken);
    FAIL("expected a schema error");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("entry 7") != std::string::npos);
    CHECK(msg.find("a.a1") != std::string::npos);
  }
}

TEST_CASE("map expression evaluator") {
  CHECK(eval_map_expr("(-x^2+x)/y", Rat(8), Rat(8), Rat(2)) == Rat(-7));
  CHECK(eval_map_expr("p", Rat(0), Rat(0), Rat(5)) == Rat(5));
  CHECK(eval_map_expr("2*x - y/3 + 1", Rat(2), Rat(3), Rat(0)) == Rat(4));
  CHECK(eval_map_expr("-x^3", Rat(2), Rat(0), Rat(0)) == Rat(-8));
  CHECK_THROWS(eval_map_expr("1/(x-2)", Rat(2), Rat(0), Rat(0)));
  CHECK_THROWS(eval_map_expr("q + 1", Rat(0), Rat(0), Rat(0)));
}

TEST_CASE("catalog points lie on their curves") {
  for (const auto& e : load_catalog()) {
    INFO("entry ", e.id, " (", e.letter, ")");
    for (const auto& p : e.points) CHECK(on_curve(e.model, p.point));
  }
}

TEST_CASE("spot check: the surface identity holds through the maps") {
  auto entries = load_catalog();
  int passed = 0, skipped_no_maps = 0;
  for (const auto& e : entries) {
    CheckResult r = spot_check_parametrization(e);
    INFO("entry ", e.id, " (", e.letter, "): ", r.detail);
    if (!e.maps) {
      CHECK(r.skipped);
      ++skipped_no_maps;
      continue;
    }
    CHECK(r.pass);
    if (r.pass) ++passed;
  }
  CHECK(passed == 7);  // s, k, v, a, d, b, r carry verified maps
  CHECK(skipped_no_maps == 23);
}

TEST_CASE("verify_entry: the modular fibration end to end") {
  auto entries = load_catalog();
  auto table1 = enumerate_all(2);
  EntryReport rep = verify_entry(entries[0], table1);
  CHECK(rep.ok());
  CHECK(rep.matched_row == "D5^2+A7^2 | D5 < D5, A1 < D5");
  // every check except the skippable ones must be a hard pass
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK((c.pass || c.skipped));
  }
}

TEST_CASE("verify_entry: rank-2 entry with regulator") {
  auto entries = load_catalog();
  auto table1 = enumerate_all(2);
  const CatalogEntry* v = find_entry(entries, "v");
  REQUIRE(v);
  EntryReport rep = verify_entry(*v, table1);
  CHECK(rep.ok());
  CHECK(rep.matched_row == "D6+A9^2 | D5 < D6, A1 < A9");
}

TEST_CASE("report serialization is deterministic") {
  auto entries = load_catalog();
  std::vector<CatalogEntry> two{entries[0], entries[13]};
  FullReport a = verify_catalog(two, 1);
  FullReport b = verify_catalog(two, 2);
  CHECK(report_json(a) == report_json(b));
  CHECK(report_markdown(a) == report_markdown(b));
}

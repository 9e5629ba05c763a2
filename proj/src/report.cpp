#include "k3fib/report.hpp"

#include <sstream>

#include "json.hpp"

namespace k3fib {

namespace {

using ojson = nlohmann::ordered_json;

ojson check_json(const CheckResult& c) {
  ojson j;
  j["name"] = c.name;
  j["status"] = c.skipped ? "skipped" : c.pass ? "pass" : "fail";
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

}  // namespace

std::string report_json(const FullReport& r) {
  ojson j;
  j["schema"] = "k3fib-report/1";
  j["failures"] = r.failures;
  auto& entries = j["entries"] = ojson::array();
  for (const auto& e : r.entries) {
    ojson je;
    je["id"] = e.id;
    je["letter"] = e.letter;
    je["fibers"] = e.computed_fibers;
    je["classification_row"] = e.matched_row;
    je["ok"] = e.ok();
    auto& checks = je["checks"] = ojson::array();
    for (const auto& c : e.checks) checks.push_back(check_json(c));
    entries.push_back(std::move(je));
  }
  auto& glob = j["global"] = ojson::array();
  for (const auto& c : r.global) glob.push_back(check_json(c));
  return j.dump(1) + "\n";
}

std::string report_markdown(const FullReport& r) {
  std::ostringstream os;
  os << "| # | model | fibers | classification row | checks | status |\n";
  os << "|---|-------|--------|--------------------|--------|--------|\n";
  for (const auto& e : r.entries) {
    int pass = 0, fail = 0, skip = 0;
    std::string failing;
    for (const auto& c : e.checks) {
      if (c.skipped) ++skip;
      else if (c.pass) ++pass;
      else {
        ++fail;
        failing += (failing.empty() ? "" : ", ") + c.name;
      }
    }
    os << "| " << e.id << " | " << e.letter << " | " << e.computed_fibers << " | "
       << e.matched_row << " | " << pass << " pass";
    if (skip) os << ", " << skip << " skipped";
    if (fail) os << ", " << fail << " FAILED (" << failing << ")";
    os << " | " << (e.ok() ? "ok" : "FAIL") << " |\n";
  }
  for (const auto& c : r.global)
    os << "\n" << (c.pass ? "ok" : "FAIL") << ": " << c.name << " (" << c.detail << ")\n";
  os << "\ntotal failures: " << r.failures << "\n";
  return os.str();
}

std::string table1_json(const std::vector<FibrationRecord>& rows) {
  ojson j;
  j["schema"] = "k3fib-report/1";
  auto& arr = j["fibrations"] = ojson::array();
  for (const auto& r : rows) {
    ojson je;
    je["host"] = r.host_id;
    je["embedding"] = r.embedding;
    je["fibers"] = r.fibers_label();
    je["rank"] = r.mw_rank;
    je["torsion"] = r.torsion_label();
    arr.push_back(std::move(je));
  }
  return j.dump(1) + "\n";
}

std::string table1_markdown(const std::vector<FibrationRecord>& rows) {
  std::ostringstream os;
  os << "| host | embedding | reducible fibers | rank | torsion |\n";
  os << "|------|-----------|------------------|------|---------|\n";
  for (const auto& r : rows)
    os << "| " << r.host_id << " | " << r.embedding << " | " << r.fibers_label() << " | "
       << r.mw_rank << " | " << r.torsion_label() << " |\n";
  return os.str();
}

std::string niemeier_json() {
  ojson j;
  j["schema"] = "k3fib-report/1";
  auto& arr = j["niemeier"] = ojson::array();
  for (const auto& n : all_niemeier()) {
    ojson je;
    je["id"] = n.id;
    je["root_type"] = n.root_label();
    std::string glue;
    if (n.glue_structure.empty()) glue = "(0)";
    for (size_t i = 0; i < n.glue_structure.size(); ++i)
      glue += (i ? " x " : "") + std::string("Z/") + n.glue_structure[i].get_str();
    je["glue_group"] = glue;
    je["glue_order"] = n.glue_order().get_str();
    je["explicit_generators"] = n.has_explicit_glue;
    arr.push_back(std::move(je));
  }
  return j.dump(1) + "\n";
}

std::string niemeier_markdown() {
  std::ostringstream os;
  os << "| lattice | root type | glue group | order | generators |\n";
  os << "|---------|-----------|------------|-------|------------|\n";
  for (const auto& n : all_niemeier()) {
    std::string glue;
    if (n.glue_structure.empty()) glue = "(0)";
    for (size_t i = 0; i < n.glue_structure.size(); ++i)
      glue += (i ? " x " : "") + std::string("Z/") + n.glue_structure[i].get_str();
    os << "| " << n.id << " | " << n.root_label() << " | " << glue << " | "
       << n.glue_order().get_str() << " | " << (n.has_explicit_glue ? "yes" : "-") << " |\n";
  }
  return os.str();
}

std::string analysis_json(const CatalogEntry& e, const SurfaceAnalysis& S) {
  ojson j;
  j["schema"] = "k3fib-report/1";
  j["id"] = e.id;
  j["letter"] = e.letter;
  j["equation"] = e.equation;
  auto& fibers = j["fibers"] = ojson::array();
  for (const auto& f : S.fibers) {
    ojson jf;
    jf["type"] = f.fiber.label();
    jf["place"] = f.place.str();
    jf["euler"] = f.fiber.euler();
    jf["components"] = f.fiber.component_count();
    if (f.fiber.has_root_type()) jf["root"] = f.fiber.root_type().str();
    fibers.push_back(std::move(jf));
  }
  j["euler_sum"] = S.euler_sum;
  return j.dump(1) + "\n";
}

std::string analysis_text(const CatalogEntry& e, const SurfaceAnalysis& S) {
  std::ostringstream os;
  os << "model " << e.id << " (" << e.letter << "): " << e.equation << "\n";
  for (const auto& f : S.fibers) {
    os << "  " << f.fiber.label() << " at " << f.place.str() << "  (euler " << f.fiber.euler();
    if (f.fiber.has_root_type()) os << ", root " << f.fiber.root_type().str();
    os << ")\n";
  }
  os << "  euler sum " << S.euler_sum << "\n";
  return os.str();
}

}  // namespace k3fib

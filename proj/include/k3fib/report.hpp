// Deterministic JSON (schema k3fib-report/1) and GitHub-flavored markdown
// emitters for the verification harness and the classification tables.
#pragma once

#include "k3fib/verify.hpp"

namespace k3fib {

std::string report_json(const FullReport& r);
std::string report_markdown(const FullReport& r);

std::string table1_json(const std::vector<FibrationRecord>& rows);
std::string table1_markdown(const std::vector<FibrationRecord>& rows);

std::string niemeier_json();
std::string niemeier_markdown();

std::string analysis_json(const CatalogEntry& e, const SurfaceAnalysis& S);
std::string analysis_text(const CatalogEntry& e, const SurfaceAnalysis& S);

}  // namespace k3fib

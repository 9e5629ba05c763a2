// The cross-check harness: every expected value in the catalog is recomputed
// (fibers from Tate, torsion from point arithmetic, heights from the
// pairing), each entry is matched against exactly one row of the lattice
// classification, and the discriminant identity ties both pipelines
// together.
#pragma once

#include "k3fib/catalog.hpp"
#include "k3fib/nishiyama.hpp"

namespace k3fib {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

struct EntryReport {
  int id = 0;
  std::string letter;
  std::string computed_fibers;  // "I8@t I8@inf ..."
  std::string matched_row;      // "host | embedding"
  std::vector<CheckResult> checks;
  bool ok() const;
};

struct FullReport {
  std::vector<EntryReport> entries;
  std::vector<CheckResult> global;
  int failures = 0;
};

// unique classification row with the given invariants; nullptr + message
// on zero or multiple matches
const FibrationRecord* match_table1(const std::vector<FibrationRecord>& records,
                                    const std::vector<DynkinType>& fibers, int rank,
                                    const std::vector<Int>& torsion, std::string* err);

EntryReport verify_entry(const CatalogEntry& e, const std::vector<FibrationRecord>& table1);

// evaluates the entry's parametrization maps on a catalog point at rational
// parameter values and asserts X + 1/X + Y + 1/Y + Z + 1/Z = 2; skipped when
// the entry has no maps or every sample degenerates
CheckResult spot_check_parametrization(const CatalogEntry& e);

FullReport verify_catalog(const std::vector<CatalogEntry>& entries, int jobs);

}  // namespace k3fib

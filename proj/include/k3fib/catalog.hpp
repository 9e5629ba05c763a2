// The 30-model catalog: printed Weierstrass equations (raw and normalized),
// expected fibers/rank/torsion/points from the source tables, and the
// parametrization maps back to X + 1/X + Y + 1/Y + Z + 1/Z = 2.
#pragma once

#include "k3fib/points.hpp"

namespace k3fib {

struct CatalogPoint {
  SectionPoint point;
  std::optional<int> expected_order;
  std::optional<Rat> expected_height;
  bool generator = false;
};

struct ExpectedFiber {
  std::string type_label;  // "I8", "I4*", "III*", ...
  Place place;
};

struct ParamMaps {
  bool raw_coords = false;  // expressions take the raw (unnormalized) x, y
  std::string X, Y, Z;
};

struct CatalogEntry {
  int id = 0;
  std::string letter, parameter, equation;
  Model model;                    // normalized polynomial coefficients
  std::optional<RawModel> raw;    // printed form when it needed clearing
  std::optional<Poly> u_scale;    // (x, y) -> (u^2 x, u^3 y) scaling used
  std::vector<ExpectedFiber> expected_fibers;
  std::vector<DynkinType> expected_reducible;  // sorted
  int expected_rank = 0;
  std::vector<Int> expected_torsion;  // invariant factors, ascending
  std::vector<CatalogPoint> points;
  std::optional<Rat> expected_regulator;  // rank-2 entries
  std::optional<Rat> paper_regulator;     // when the printed value differs
  std::optional<ParamMaps> maps;
  std::string notes;
};

const char* builtin_catalog_json();
std::vector<CatalogEntry> parse_catalog(const std::string& json_text);
std::vector<CatalogEntry> load_catalog();  // built-in
std::vector<CatalogEntry> load_catalog_file(const std::string& path);
const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, const std::string& key);

// exact evaluation of a parametrization expression in x, y, p
Rat eval_map_expr(const std::string& expr, const Rat& x, const Rat& y, const Rat& p);

}  // namespace k3fib

// Sections of an elliptic surface: exact group law over Q(t), torsion
// orders, fiber-component indices, and the Shioda height pairing.
#pragma once

#include <optional>

#include "k3fib/tate.hpp"

namespace k3fib {

struct SectionPoint {
  bool infinity = true;
  RatFunc x, y;

  static SectionPoint zero() { return SectionPoint{}; }
  static SectionPoint at(RatFunc xx, RatFunc yy) { return SectionPoint{false, std::move(xx), std::move(yy)}; }
  bool operator==(const SectionPoint& o) const {
    if (infinity != o.infinity) return false;
    return infinity || (x == o.x && y == o.y);
  }
};

bool on_curve(const Model& m, const SectionPoint& p);
SectionPoint negate(const Model& m, const SectionPoint& p);
SectionPoint add(const Model& m, const SectionPoint& p, const SectionPoint& q);
SectionPoint multiple(const Model& m, int n, const SectionPoint& p);

// smallest n in [1, bound] with nP = O, nullopt when none (non-torsion
// within the bound)
std::optional<int> torsion_order(const Model& m, const SectionPoint& p, int bound = 12);

// which fiber component a section meets at one analyzed place
struct ComponentHit {
  bool identity = true;
  int j = 0;      // In: index normalized to 0 <= j <= n/2
  bool far = false;  // Instar: far pair vs near component
  Rat contr;      // the local height correction
};
ComponentHit component_index(const SurfaceAnalysis& S, const LocalAnalysis& L,
                             const SectionPoint& p);

// (P.O) intersection number with the zero section; heights on a K3:
// h(P) = 4 + 2 (P.O) - sum_v contr_v(P)
Rat section_zero_intersection(const SurfaceAnalysis& S, const SectionPoint& p);
Rat height(const SurfaceAnalysis& S, const SectionPoint& p);
Rat height_pairing(const SurfaceAnalysis& S, const SectionPoint& p, const SectionPoint& q);
RatMat height_matrix(const SurfaceAnalysis& S, const std::vector<SectionPoint>& pts);

}  // namespace k3fib

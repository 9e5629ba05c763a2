// Dense exact matrices over Z and Q with the normal forms the lattice layer
// is built on: Smith, Hermite, kernels, saturation, integral solves.
// Everything here is exact; sizes stay small (rank <= 30).
#pragma once

#include <vector>

#include "k3fib/numeric.hpp"

namespace k3fib {

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }
  static IntMat identity(int n);
  bool operator==(const IntMat&) const = default;
};

using RatVec = std::vector<Rat>;

struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }
  static RatMat identity(int n);
  static RatMat from_int(const IntMat& m);
  RatVec row(int i) const;
  void set_row(int i, const RatVec& v);
  bool operator==(const RatMat&) const = default;
};

IntMat mul(const IntMat& x, const IntMat& y);
RatMat mul(const RatMat& x, const RatMat& y);
IntMat transpose(const IntMat& m);
RatMat transpose(const RatMat& m);
RatVec mul_vec(const RatMat& m, const RatVec& v);           // m * v
Rat dot(const RatVec& x, const RatVec& y);
Rat bilinear(const RatMat& gram, const RatVec& x, const RatVec& y);

Rat det(const RatMat& m);
Int det(const IntMat& m);
int rank_of(const RatMat& m);

// Smith normal form: u*m*v = d with u, v unimodular and d diagonal with
// d1 | d2 | ... (diagonal reported nonnegative).
struct SmithResult {
  IntMat d, u, v;
  std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
};
SmithResult smith_normal_form(const IntMat& m);

// Row-style Hermite normal form of the lattice generated by the rows.
// Returns a full-row-rank matrix whose rows are a canonical basis.
IntMat hnf_rows(const IntMat& m);

// Basis of {v : m*v = 0} over Q.
std::vector<RatVec> rational_kernel(const RatMat& m);

// Z-basis of (Q-span of the given vectors) intersected with Z^ambient_rank.
std::vector<std::vector<Int>> saturate(const std::vector<RatVec>& sub, int ambient_rank);

// Z-basis of {x in Z^n : m*x = 0} (saturated by construction).
std::vector<std::vector<Int>> integer_kernel(const RatMat& m);

// Some integer solution x of x^T * rows = target (combination of the rows),
// or nullopt when none exists over Z.
std::optional<std::vector<Int>> solve_integer_combination(const IntMat& rows,
                                                          const std::vector<Int>& target);

// Coordinates of v in the row space of basis (rows independent); throws if
// v is outside the span.
RatVec express_in_basis(const RatVec& v, const RatMat& basis);

// Canonical Z-basis (HNF) of the lattice generated by rational rows,
// returned as rational rows (the lattice need not be integral).
RatMat lattice_row_basis(const std::vector<RatVec>& gens);

}  // namespace k3fib

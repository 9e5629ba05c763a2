// Bounded short-vector enumeration on a positive definite integer Gram
// matrix, by completion of squares with exact rational bounds (no floating
// point, no basis reduction; ranks here stay <= 24 and we only chase very
// small norms).  A serial reference implementation is kept alongside the
// OpenMP variant; tests require identical output.
#pragma once

#include <vector>

#include "k3fib/matrix.hpp"

namespace k3fib {

// All v != 0 with v^T gram v == norm, both signs, sorted lexicographically.
// gram must be symmetric positive definite.
std::vector<std::vector<Int>> short_vectors_serial(const IntMat& gram, const Int& norm);
std::vector<std::vector<Int>> short_vectors(const IntMat& gram, const Int& norm, int jobs);

}  // namespace k3fib

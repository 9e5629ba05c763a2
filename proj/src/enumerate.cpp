#include "k3fib/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3fib {

namespace {

// Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
struct Cholesky {
  int n;
  std::vector<std::vector<Rat>> q;

  explicit Cholesky(const IntMat& gram) : n(gram.rows), q(n, std::vector<Rat>(n)) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q[i][j] = Rat(gram.at(i, j));
    for (int i = 0; i < n; ++i) {
      if (q[i][i] <= 0) throw std::domain_error("short_vectors: gram not positive definite");
      for (int j = i + 1; j < n; ++j) {
        Rat f = q[i][j] / q[i][i];
        for (int k = j; k < n; ++k) q[j][k] -= f * q[i][k];
        q[i][j] = f;
      }
    }
  }
};

// floor(-u + sqrt(t/c)) for c > 0, t >= 0: the right end of the interval
// {x : c (x+u)^2 <= t}.  May fall below the left end when the interval holds
// no integer; callers then skip the range.
Int interval_hi(const Rat& c, const Rat& u, const Rat& t) {
  Rat r2 = t / c;
  Int ab = num(r2) * den(r2);
  Int s = isqrt(ab);  // sqrt(r2) lies in [s/den, (s+1)/den)
  Int x = floor_rat(ratio(s, den(r2)) - u);
  // the isqrt window is narrower than 1, so at most one correction
  Rat next = Rat(x + 1) + u;
  if (c * next * next <= t) ++x;
  return x;
}

Int interval_lo(const Rat& c, const Rat& u, const Rat& t) {
  return -interval_hi(c, -u, t);
}

struct Enumerator {
  const Cholesky& ch;
  Int target;
  std::vector<std::vector<Int>>* out;
  std::vector<Int> x;

  // level i with remaining budget t and inner offsets u_i = sum_{j>i} q_ij x_j
  void descend(int i, const Rat& t, std::vector<Rat>& offs, bool top_half) {
    const Rat& c = ch.q[i][i];
    const Rat& u = offs[i];
    Int lo = interval_lo(c, u, t);
    Int hi = interval_hi(c, u, t);
    if (top_half && lo < 0) lo = 0;  // half-space; mirror at the end
    for (Int v = lo; v <= hi; ++v) {
      x[i] = v;
      Rat term = c * (Rat(v) + u) * (Rat(v) + u);
      Rat rem = t - term;
      if (i == 0) {
        if (rem == 0) {
          bool zero = std::all_of(x.begin(), x.end(), [](const Int& a) { return a == 0; });
          if (!zero) out->push_back(x);
        }
        continue;
      }
      // top_half only constrains until a nonzero coordinate is fixed
      bool th = top_half && v == 0;
      std::vector<Rat> offs2 = offs;
      for (int j = 0; j < i; ++j)
        if (ch.q[j][i] != 0) offs2[j] += ch.q[j][i] * Rat(v);
      descend(i - 1, rem, offs2, th);
    }
  }
};

std::vector<std::vector<Int>> finish(std::vector<std::vector<Int>> half) {
  // exact-norm leaves were collected in the half-space; add mirrors
  size_t m = half.size();
  half.reserve(2 * m);
  for (size_t i = 0; i < m; ++i) {
    std::vector<Int> neg(half[i].size());
    for (size_t j = 0; j < neg.size(); ++j) neg[j] = -half[i][j];
    half.push_back(std::move(neg));
  }
  std::sort(half.begin(), half.end());
  return half;
}

}  // namespace

std::vector<std::vector<Int>> short_vectors_serial(const IntMat& gram, const Int& norm) {
  assert(gram.rows == gram.cols);
  Cholesky ch(gram);
  std::vector<std::vector<Int>> out;
  Enumerator e{ch, norm, &out, std::vector<Int>(ch.n)};
  std::vector<Rat> offs(ch.n);
  e.descend(ch.n - 1, Rat(norm), offs, true);
  return finish(std::move(out));
}

std::vector<std::vector<Int>> short_vectors(const IntMat& gram, const Int& norm, int jobs) {
#ifndef _OPENMP
  (void)jobs;
  return short_vectors_serial(gram, norm);
#else
  if (jobs <= 1 || gram.rows < 2) return short_vectors_serial(gram, norm);
  Cholesky ch(gram);
  int n = ch.n;
  Rat t(norm);
  // split on the top coordinate (half-space: x_{n-1} >= 0)
  Int hi = interval_hi(ch.q[n - 1][n - 1], Rat(0), t);
  long width = hi.get_si() + 1;
  if (width <= 0) return {};
  std::vector<std::vector<std::vector<Int>>> buckets(width);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long vi = 0; vi < width; ++vi) {
    Int v(vi);
    Rat term = ch.q[n - 1][n - 1] * Rat(v) * Rat(v);
    Rat rem = t - term;
    if (rem < 0) continue;
    std::vector<std::vector<Int>> local;
    std::vector<Int> x(n);
    x[n - 1] = v;
    Enumerator e{ch, norm, &local, x};
    std::vector<Rat> offs(n);
    for (int j = 0; j + 1 < n; ++j) offs[j] = ch.q[j][n - 1] * Rat(v);
    if (n == 1) {
      if (rem == 0 && v != 0) local.push_back(x);
    } else {
      e.descend(n - 2, rem, offs, v == 0);
    }
    buckets[vi] = std::move(local);
  }
  std::vector<std::vector<Int>> out;
  for (auto& b : buckets)
    for (auto& v : b) out.push_back(std::move(v));
  return finish(std::move(out));
#endif
}

}  // namespace k3fib

#include "k3fib/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace k3fib {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::from_int(const IntMat& m) {
  RatMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

RatVec RatMat::row(int i) const {
  return RatVec(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols);
}

void RatMat::set_row(int i, const RatVec& v) {
  assert((int)v.size() == cols);
  std::copy(v.begin(), v.end(), a.begin() + size_t(i) * cols);
}

IntMat mul(const IntMat& x, const IntMat& y) {
  assert(x.cols == y.rows);
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

RatMat mul(const RatMat& x, const RatMat& y) {
  assert(x.cols == y.rows);
  RatMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rat& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

IntMat transpose(const IntMat& m) {
  IntMat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

RatMat transpose(const RatMat& m) {
  RatMat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

RatVec mul_vec(const RatMat& m, const RatVec& v) {
  assert((int)v.size() == m.cols);
  RatVec r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

Rat dot(const RatVec& x, const RatVec& y) {
  assert(x.size() == y.size());
  Rat s;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && y[i] != 0) s += x[i] * y[i];
  return s;
}

Rat bilinear(const RatMat& gram, const RatVec& x, const RatVec& y) {
  return dot(x, mul_vec(gram, y));
}

Rat det(const RatMat& m) {
  assert(m.rows == m.cols);
  RatMat a = m;
  int n = a.rows;
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a.at(i, c) != 0) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    Rat inv = 1 / a.at(c, c);
    for (int j = c; j < n; ++j) a.at(c, j) *= inv;
    for (int i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  d.canonicalize();
  return d;
}

Int det(const IntMat& m) {
  Rat d = det(RatMat::from_int(m));
  assert(is_integer(d));
  return num(d);
}

int rank_of(const RatMat& m) {
  RatMat a = m;
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int p = -1;
    for (int i = r; i < a.rows; ++i)
      if (a.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(r, j));
    for (int i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c) / a.at(r, c);
      for (int j = 0; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Smith normal form, smallest-pivot strategy with modular reduction of the
// worked submatrix to keep entries from blowing up (ranks here are <= 30 but
// naive elimination can still explode on Niemeier-sized Grams).

namespace {

void swap_rows(IntMat& m, IntMat& u, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
  for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
}

void swap_cols(IntMat& m, IntMat& v, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
  for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
}

void add_row(IntMat& m, IntMat& u, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
  for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
}

void add_col(IntMat& m, IntMat& v, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
  for (int r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
}

}  // namespace

SmithResult smith_normal_form(const IntMat& m0) {
  IntMat m = m0;
  IntMat u = IntMat::identity(m.rows);
  IntMat v = IntMat::identity(m.cols);
  int k = 0;
  int nmin = std::min(m.rows, m.cols);
  while (k < nmin) {
    // smallest nonzero pivot in the trailing submatrix
    int pi = -1, pj = -1;
    for (int i = k; i < m.rows; ++i)
      for (int j = k; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pi < 0 || cmp(abs(m.at(i, j)), abs(m.at(pi, pj))) < 0) { pi = i; pj = j; }
      }
    if (pi < 0) break;
    swap_rows(m, u, k, pi);
    swap_cols(m, v, k, pj);
    bool clean = true;
    for (int i = k + 1; i < m.rows; ++i) {
      Int q = fdiv(m.at(i, k), m.at(k, k));
      add_row(m, u, i, k, -q);
      if (m.at(i, k) != 0) clean = false;
    }
    for (int j = k + 1; j < m.cols; ++j) {
      Int q = fdiv(m.at(k, j), m.at(k, k));
      add_col(m, v, j, k, -q);
      if (m.at(k, j) != 0) clean = false;
    }
    if (!clean) continue;  // pivot shrank; pick again
    // divisibility of the rest by the pivot
    int bi = -1, bj = -1;
    for (int i = k + 1; i < m.rows && bi < 0; ++i)
      for (int j = k + 1; j < m.cols; ++j)
        if (mod_floor(m.at(i, j), m.at(k, k)) != 0) { bi = i; bj = j; break; }
    if (bi >= 0) {
      add_row(m, u, k, bi, 1);
      continue;
    }
    if (m.at(k, k) < 0) {
      for (int j = 0; j < m.cols; ++j) m.at(k, j) = -m.at(k, j);
      for (int j = 0; j < u.cols; ++j) u.at(k, j) = -u.at(k, j);
    }
    ++k;
  }
  assert(abs(det(u)) == 1 && abs(det(v)) == 1);
  return SmithResult{m, u, v};
}

std::vector<Int> SmithResult::invariant_factors() const {
  std::vector<Int> f;
  for (int i = 0; i < std::min(d.rows, d.cols); ++i)
    if (d.at(i, i) != 0) f.push_back(abs(d.at(i, i)));
  return f;
}

IntMat hnf_rows(const IntMat& m0) {
  IntMat m = m0;
  IntMat u = IntMat::identity(m.rows);  // unused result, reuses row ops
  int r = 0;
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    while (true) {
      int p = -1;
      for (int i = r; i < m.rows; ++i)
        if (m.at(i, col) != 0 && (p < 0 || cmp(abs(m.at(i, col)), abs(m.at(p, col))) < 0)) p = i;
      if (p < 0) break;
      swap_rows(m, u, r, p);
      bool done = true;
      for (int i = r + 1; i < m.rows; ++i) {
        Int q = fdiv(m.at(i, col), m.at(r, col));
        add_row(m, u, i, r, -q);
        if (m.at(i, col) != 0) done = false;
      }
      if (done) {
        if (m.at(r, col) < 0)
          for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
        // reduce rows above
        for (int i = 0; i < r; ++i) {
          Int q = fdiv(m.at(i, col), m.at(r, col));
          add_row(m, u, i, r, -q);
        }
        ++r;
        break;
      }
    }
  }
  IntMat out(r, m.cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

std::vector<RatVec> rational_kernel(const RatMat& m) {
  RatMat a = m;
  int n = a.rows, c = a.cols;
  std::vector<int> piv;
  int r = 0;
  for (int col = 0; col < c && r < n; ++col) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (a.at(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < c; ++j) std::swap(a.at(p, j), a.at(r, j));
    Rat inv = 1 / a.at(r, col);
    for (int j = 0; j < c; ++j) a.at(r, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || a.at(i, col) == 0) continue;
      Rat f = a.at(i, col);
      for (int j = 0; j < c; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    piv.push_back(col);
    ++r;
  }
  std::vector<RatVec> basis;
  std::vector<bool> is_piv(c, false);
  for (int p : piv) is_piv[p] = true;
  for (int fc = 0; fc < c; ++fc) {
    if (is_piv[fc]) continue;
    RatVec v(c);
    v[fc] = 1;
    for (int ri = 0; ri < (int)piv.size(); ++ri) v[piv[ri]] = -a.at(ri, fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// clear denominators rowwise into an integer matrix
IntMat clear_denoms(const std::vector<RatVec>& rows, int cols) {
  IntMat m((int)rows.size(), cols);
  for (int i = 0; i < m.rows; ++i) {
    Int d = 1;
    for (const Rat& x : rows[i]) d = lcm(d, den(x));
    for (int j = 0; j < cols; ++j) {
      Rat s = rows[i][j] * Rat(d);
      s.canonicalize();
      m.at(i, j) = num(s);
    }
  }
  return m;
}

}  // namespace

std::vector<std::vector<Int>> integer_kernel(const RatMat& m) {
  // column operations tracked on an identity; kernel columns drop out saturated
  IntMat a = clear_denoms([&] {
    std::vector<RatVec> rows;
    for (int i = 0; i < m.rows; ++i) rows.push_back(m.row(i));
    return rows;
  }(), m.cols);
  int rows = a.rows, cols = a.cols;
  IntMat u = IntMat::identity(cols);
  int c = 0;
  for (int r = 0; r < rows && c < cols; ++r) {
    while (true) {
      int p = -1;
      for (int j = c; j < cols; ++j)
        if (a.at(r, j) != 0 && (p < 0 || cmp(abs(a.at(r, j)), abs(a.at(r, p))) < 0)) p = j;
      if (p < 0) break;
      for (int i = 0; i < rows; ++i) std::swap(a.at(i, c), a.at(i, p));
      for (int i = 0; i < cols; ++i) std::swap(u.at(i, c), u.at(i, p));
      bool done = true;
      for (int j = c + 1; j < cols; ++j) {
        Int q = fdiv(a.at(r, j), a.at(r, c));
        if (q != 0) {
          for (int i = 0; i < rows; ++i) a.at(i, j) -= q * a.at(i, c);
          for (int i = 0; i < cols; ++i) u.at(i, j) -= q * u.at(i, c);
        }
        if (a.at(r, j) != 0) done = false;
      }
      if (done) { ++c; break; }
    }
  }
  std::vector<std::vector<Int>> ker;
  for (int j = c; j < cols; ++j) {
    std::vector<Int> v(cols);
    for (int i = 0; i < cols; ++i) v[i] = u.at(i, j);
    ker.push_back(std::move(v));
  }
  return ker;
}

std::vector<std::vector<Int>> saturate(const std::vector<RatVec>& sub, int ambient_rank) {
  if (sub.empty()) return {};
  // (span of sub) cap Z^n = integer kernel of a basis of the orthocomplement
  RatMat m((int)sub.size(), ambient_rank);
  for (int i = 0; i < m.rows; ++i) m.set_row(i, sub[i]);
  std::vector<RatVec> comp = rational_kernel(m);
  if (comp.empty()) {
    std::vector<std::vector<Int>> full;
    for (int i = 0; i < ambient_rank; ++i) {
      std::vector<Int> e(ambient_rank);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    return full;
  }
  RatMat cm((int)comp.size(), ambient_rank);
  for (int i = 0; i < cm.rows; ++i) cm.set_row(i, comp[i]);
  return integer_kernel(cm);
}

std::optional<std::vector<Int>> solve_integer_combination(const IntMat& rows,
                                                          const std::vector<Int>& target) {
  IntMat m = rows;
  IntMat u = IntMat::identity(m.rows);
  int r = 0;
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  for (int col = 0; col < m.cols && r < m.rows; ++col) {
    while (true) {
      int p = -1;
      for (int i = r; i < m.rows; ++i)
        if (m.at(i, col) != 0 && (p < 0 || cmp(abs(m.at(i, col)), abs(m.at(p, col))) < 0)) p = i;
      if (p < 0) break;
      swap_rows(m, u, r, p);
      bool done = true;
      for (int i = r + 1; i < m.rows; ++i) {
        Int q = fdiv(m.at(i, col), m.at(r, col));
        add_row(m, u, i, r, -q);
        if (m.at(i, col) != 0) done = false;
      }
      if (done) {
        if (m.at(r, col) < 0) {
          for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
          for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
        }
        pivots.emplace_back(r, col);
        ++r;
        break;
      }
    }
  }
  std::vector<Int> c = target;
  std::vector<Int> x(rows.rows, 0);
  for (auto [ri, col] : pivots) {
    if (mod_floor(c[col], m.at(ri, col)) != 0) return std::nullopt;
    Int q = c[col] / m.at(ri, col);
    for (int j = 0; j < m.cols; ++j) c[j] -= q * m.at(ri, j);
    for (int j = 0; j < rows.rows; ++j) x[j] += q * u.at(ri, j);
  }
  for (const Int& v : c)
    if (v != 0) return std::nullopt;
  return x;
}

RatVec express_in_basis(const RatVec& v, const RatMat& basis) {
  // solve c * basis = v
  int n = basis.rows, m = basis.cols;
  RatMat aug(m, n + 1);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) aug.at(j, i) = basis.at(i, j);
    aug.at(j, n) = v[j];
  }
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (aug.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j <= n; ++j) std::swap(aug.at(p, j), aug.at(r, j));
    Rat inv = 1 / aug.at(r, c);
    for (int j = 0; j <= n; ++j) aug.at(r, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || aug.at(i, c) == 0) continue;
      Rat f = aug.at(i, c);
      for (int j = 0; j <= n; ++j) aug.at(i, j) -= f * aug.at(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  RatVec sol(n);
  for (int ri = 0; ri < (int)piv.size(); ++ri) sol[piv[ri]] = aug.at(ri, n);
  // residual must vanish
  for (int i = r; i < m; ++i)
    if (aug.at(i, n) != 0) throw std::domain_error("express_in_basis: vector outside span");
  return sol;
}

RatMat lattice_row_basis(const std::vector<RatVec>& gens) {
  if (gens.empty()) return RatMat(0, 0);
  int cols = (int)gens[0].size();
  Int d = 1;
  for (const auto& g : gens)
    for (const Rat& x : g) d = lcm(d, den(x));
  IntMat m((int)gens.size(), cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < cols; ++j) {
      Rat s = gens[i][j] * Rat(d);
      s.canonicalize();
      m.at(i, j) = num(s);
    }
  IntMat h = hnf_rows(m);
  RatMat out(h.rows, cols);
  for (int i = 0; i < h.rows; ++i)
    for (int j = 0; j < cols; ++j) {
      out.at(i, j) = Rat(h.at(i, j), d);
      out.at(i, j).canonicalize();
    }
  return out;
}

}  // namespace k3fib

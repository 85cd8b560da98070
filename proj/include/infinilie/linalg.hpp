#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "infinilie/eigen_support.hpp"

namespace infinilie {

// Pivot preference for elimination: exact scalars are all equally good,
// series prefer the least valuation so that divisions lose the least
// precision.
inline Exponent pivot_order(const QuadExt&) { return Exponent(0); }
inline Exponent pivot_order(const GaussScalar&) { return Exponent(0); }
template <class C>
Exponent pivot_order(const Series<C>& s) {
  return s.order();
}

namespace detail {

template <class S>
Eigen::Index best_pivot_in_column(const Mat<S>& a, Eigen::Index col, Eigen::Index from) {
  Eigen::Index best = -1;
  for (Eigen::Index i = from; i < a.rows(); ++i) {
    if (is_zero(a(i, col))) continue;
    if (best < 0 || pivot_order(a(i, col)) < pivot_order(a(best, col))) best = i;
  }
  return best;
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant with row pivoting.
template <class S>
S determinant(Mat<S> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return S(1);
  S prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    const Eigen::Index p = detail::best_pivot_in_column(a, k, k);
    if (p < 0) return S(0);
    if (p != k) {
      a.row(k).swap(a.row(p));
      negate = !negate;
    }
    const S prev_inv = inv(prev);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) * prev_inv;
      a(i, k) = S(0);
    }
    prev = a(k, k);
  }
  return negate ? S(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Gauss–Jordan inverse; throws SingularMatrix when no usable pivot exists.
template <class S>
Mat<S> inverse(const Mat<S>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DomainError("inverse of a non-square matrix");
  Mat<S> a = m;
  Mat<S> result = identity<S>(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index p = detail::best_pivot_in_column(a, k, k);
    if (p < 0) throw SingularMatrix("singular matrix: no pivot in column " + std::to_string(k));
    if (p != k) {
      a.row(k).swap(a.row(p));
      result.row(k).swap(result.row(p));
    }
    const S pinv = inv(a(k, k));
    a.row(k) *= pinv;
    result.row(k) *= pinv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || is_zero(a(i, k))) continue;
      const S f = a(i, k);
      a.row(i) -= f * a.row(k);
      result.row(i) -= f * result.row(k);
    }
  }
  return result;
}

/// Solves A x = b for a full-row-rank A (rows ≤ cols) by elimination with
/// full pivoting; non-pivot unknowns are set to zero.
template <class S>
Vec<S> solve(const Mat<S>& A, const Vec<S>& b) {
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  if (b.size() != m || m > n) throw DomainError("solve: incompatible shapes");
  Mat<S> a = A;
  Vec<S> r = b;
  std::vector<Eigen::Index> cols(static_cast<std::size_t>(n));
  std::iota(cols.begin(), cols.end(), Eigen::Index{0});
  for (Eigen::Index k = 0; k < m; ++k) {
    Eigen::Index bp = -1;
    Eigen::Index bq = -1;
    for (Eigen::Index q = k; q < n; ++q) {
      for (Eigen::Index p = k; p < m; ++p) {
        if (is_zero(a(p, q))) continue;
        if (bp < 0 || pivot_order(a(p, q)) < pivot_order(a(bp, bq))) {
          bp = p;
          bq = q;
        }
      }
    }
    if (bp < 0) throw SingularMatrix("rank-deficient system at row " + std::to_string(k));
    a.row(k).swap(a.row(bp));
    std::swap(r(k), r(bp));
    a.col(k).swap(a.col(bq));
    std::swap(cols[static_cast<std::size_t>(k)], cols[static_cast<std::size_t>(bq)]);
    const S pinv = inv(a(k, k));
    for (Eigen::Index i = k + 1; i < m; ++i) {
      if (is_zero(a(i, k))) continue;
      const S f = a(i, k) * pinv;
      a.row(i) -= f * a.row(k);
      r(i) -= f * r(k);
    }
  }
  Vec<S> y = Vec<S>::Zero(n);
  for (Eigen::Index k = m - 1; k >= 0; --k) {
    S s = r(k);
    for (Eigen::Index j = k + 1; j < m; ++j) s -= a(k, j) * y(j);
    y(k) = s * inv(a(k, k));
  }
  Vec<S> x = Vec<S>::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) x(cols[static_cast<std::size_t>(k)]) = y(k);
  return x;
}

/// Reduced row echelon form over an exact field.
template <class S>
struct RowEchelon {
  Mat<S> reduced;
  std::vector<Eigen::Index> pivots;
};

template <class S>
RowEchelon<S> row_reduce(Mat<S> a) {
  RowEchelon<S> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    const Eigen::Index p = detail::best_pivot_in_column(a, col, row);
    if (p < 0) continue;
    a.row(row).swap(a.row(p));
    a.row(row) *= inv(a(row, col));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      const S f = a(i, col);
      a.row(i) -= f * a.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

template <class S>
Eigen::Index rank(const Mat<S>& a) {
  return static_cast<Eigen::Index>(row_reduce(a).pivots.size());
}

/// Basis of the right null space, one vector per column.
template <class S>
Mat<S> kernel(const Mat<S>& a) {
  const RowEchelon<S> e = row_reduce(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index j = 0; j < n; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
  Mat<S> basis = Mat<S>::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const auto c = static_cast<Eigen::Index>(f);
    basis(free_cols[f], c) = S(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], c) = -e.reduced(static_cast<Eigen::Index>(r), free_cols[f]);
  }
  return basis;
}

}  // namespace infinilie

#pragma once

#include <Eigen/Core>

#include "infinilie/scalar.hpp"
#include "infinilie/series.hpp"

namespace Eigen {

template <>
struct NumTraits<infinilie::QuadExt> : GenericNumTraits<infinilie::QuadExt> {
  using Real = infinilie::QuadExt;
  using NonInteger = infinilie::QuadExt;
  using Nested = infinilie::QuadExt;
  using Literal = infinilie::QuadExt;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
};

// Flagged real on purpose: conjugation is applied explicitly through
// infinilie::adjoint, never through Eigen's complex machinery.
template <>
struct NumTraits<infinilie::GaussScalar> : GenericNumTraits<infinilie::GaussScalar> {
  using Real = infinilie::GaussScalar;
  using NonInteger = infinilie::GaussScalar;
  using Nested = infinilie::GaussScalar;
  using Literal = infinilie::GaussScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
};

template <class C>
struct NumTraits<infinilie::Series<C>> : GenericNumTraits<infinilie::Series<C>> {
  using Real = infinilie::Series<C>;
  using NonInteger = infinilie::Series<C>;
  using Nested = infinilie::Series<C>;
  using Literal = infinilie::Series<C>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 32,
    AddCost = 64,
    MulCost = 512
  };
};

}  // namespace Eigen

namespace infinilie {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using SeriesMatrix = Mat<ValSeries>;
using GaussSeriesMatrix = Mat<GaussSeries>;
/// Exact matrices over ℚ(√d)(i), used for Lie algebra elements.
using ExactMatrix = Mat<GaussScalar>;

template <class S>
Mat<S> identity(Eigen::Index n) {
  return Mat<S>::Identity(n, n);
}

template <class S>
Mat<S> conj(const Mat<S>& m) {
  return m.unaryExpr([](const S& s) { return S(conj(s)); });
}

/// Conjugate transpose (plain transpose for real scalars).
template <class S>
Mat<S> adjoint(const Mat<S>& m) {
  return conj<S>(m).transpose();
}

template <class S>
bool is_zero(const Mat<S>& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!is_zero(m.data()[i])) return false;
  return true;
}

template <class S>
bool equal(const Mat<S>& a, const Mat<S>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && is_zero<S>(a - b);
}

template <class S>
bool is_identity(const Mat<S>& m) {
  return m.rows() == m.cols() && is_zero<S>(m - identity<S>(m.rows()));
}

/// Smallest truncation among the entries: the grade at which the matrix is
/// certified.
template <class C>
Exponent precision_of(const Mat<Series<C>>& m) {
  Exponent p = m.size() > 0 ? m.data()[0].trunc() : current_context().trunc;
  for (Eigen::Index i = 1; i < m.size(); ++i) p = min(p, m.data()[i].trunc());
  return p;
}

template <class C>
Mat<Series<C>> truncated(const Mat<Series<C>>& m, Exponent t) {
  return m.unaryExpr([t](const Series<C>& s) { return s.truncated(t); });
}

/// Least valuation of any entry (trunc when all entries vanish).
template <class C>
Exponent min_order(const Mat<Series<C>>& m) {
  Exponent v = precision_of(m);
  for (Eigen::Index i = 0; i < m.size(); ++i) v = min(v, m.data()[i].order());
  return v;
}

inline GaussSeriesMatrix to_gauss(const SeriesMatrix& m) {
  return m.unaryExpr([](const ValSeries& s) { return to_gauss(s); });
}
inline SeriesMatrix to_real(const GaussSeriesMatrix& m) {
  return m.unaryExpr([](const GaussSeries& s) { return to_real(s); });
}
inline SeriesMatrix to_real(const SeriesMatrix& m) { return m; }

/// Lift an exact matrix to constant series.
template <class C>
Mat<Series<C>> lift(const ExactMatrix& m);

template <>
inline Mat<GaussSeries> lift<GaussScalar>(const ExactMatrix& m) {
  return m.unaryExpr([](const GaussScalar& s) { return GaussSeries(s); });
}
template <>
inline Mat<ValSeries> lift<QuadExt>(const ExactMatrix& m) {
  return m.unaryExpr([](const GaussScalar& s) { return ValSeries(real_value(s)); });
}

}  // namespace infinilie

#pragma once

#include "json.hpp"

#include "infinilie/chart.hpp"
#include "infinilie/lie.hpp"
#include "infinilie/rotations.hpp"

namespace infinilie {

// nlohmann::json keeps object keys sorted, which is the canonical ordering
// used by every report.
using Json = nlohmann::json;

/// {terms: [[exp, coeff], ...], trunc} with exponents and coefficients as
/// strings in the expression grammar.
template <class C>
Json series_to_json(const Series<C>& x);
ValSeries series_from_json(const Json& j);
GaussSeries gauss_series_from_json(const Json& j);

/// {rows, cols, entries} with row-major expression strings.
template <class S>
Json matrix_to_json(const Mat<S>& m);
Json matrix_to_json(const ExactMatrix& m);
SeriesMatrix matrix_from_json(const Json& j);
GaussSeriesMatrix gauss_matrix_from_json(const Json& j);

/// {family, n}, or {family: "product", left, right}.
Json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

Json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const Json& j);
Json axis_to_json(const Axis& a);

/// {algebra, root, checks: [{name, status, dims: [lhs, rhs]}]}.
Json lemma_certificate(const LemmaReport& r);

/// {group, axis, conjugators, det_val, trunc, seed}.
template <class S>
Json chart_certificate(const ChartData<S>& cd);

}  // namespace infinilie

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>

#include "infinilie/eigen_support.hpp"

namespace infinilie {

/// Deterministic seed for sample `index` of the stream `tag`; samples are
/// independent of evaluation order.
std::uint64_t sub_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index);

/// Shape of randomly drawn series: exponents on the grid min_exp + k/denominator
/// below max_exp, at most max_terms terms, coefficients of the given height.
struct SeriesShape {
  Exponent min_exp{0};
  Exponent max_exp{4};
  std::int64_t denominator = 2;
  int max_terms = 4;
  std::int64_t height = 9;
  /// Guarantees a nonzero term at min_exp, so the valuation is exactly min_exp.
  bool exact_order = true;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  bool coin() { return integer(0, 1) == 1; }
  Rational rational(std::int64_t height);
  Rational nonzero_rational(std::int64_t height);
  Rational positive_rational(std::int64_t height);

  ValSeries series(const SeriesShape& shape);
  /// A unit of the valuation ring (valuation exactly 0).
  ValSeries unit(std::int64_t height = 9);
  /// Element of 𝔪 with valuation exactly v.
  ValSeries infinitesimal(Exponent v, std::int64_t height = 9);
  /// Element of 𝔪 with valuation drawn from {1/2, 1, 3/2, 2}.
  ValSeries infinitesimal(std::int64_t height = 9);

  /// Point of S²(ℛ) by inverse stereographic projection of (u, v); with
  /// `standard` the point is rational, otherwise u, v carry ε-terms.
  std::array<ValSeries, 3> unit_vector(bool standard, std::int64_t height = 6);
  /// Point of S³(ℛ), same construction one dimension up.
  std::array<ValSeries, 4> unit_vector4(bool standard, std::int64_t height = 6);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace infinilie

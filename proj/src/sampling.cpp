#include "infinilie/sampling.hpp"

#include <algorithm>
#include <set>

namespace infinilie {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t sub_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(seed ^ h) + index);
}

std::int64_t Sampler::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Rational Sampler::rational(std::int64_t height) {
  return make_rational(Integer(static_cast<long>(integer(-height, height))),
                       Integer(static_cast<long>(integer(1, height))));
}

Rational Sampler::nonzero_rational(std::int64_t height) {
  for (;;) {
    Rational q = rational(height);
    if (sgn(q) != 0) return q;
  }
}

Rational Sampler::positive_rational(std::int64_t height) { return abs(nonzero_rational(height)); }

ValSeries Sampler::series(const SeriesShape& shape) {
  const Exponent span = shape.max_exp - shape.min_exp;
  const std::int64_t slots =
      std::max<std::int64_t>(1, (span * Exponent(shape.denominator)).num() /
                                    (span * Exponent(shape.denominator)).den());
  const int count = static_cast<int>(integer(1, shape.max_terms));
  std::set<std::int64_t> picked;
  if (shape.exact_order) picked.insert(0);
  while (static_cast<int>(picked.size()) < std::min<std::int64_t>(count, slots))
    picked.insert(integer(0, slots - 1));
  std::vector<ValSeries::Term> terms;
  for (auto k : picked)
    terms.push_back({shape.min_exp + Exponent(k, shape.denominator),
                     QuadExt(nonzero_rational(shape.height))});
  return ValSeries(std::move(terms), current_context().trunc);
}

ValSeries Sampler::unit(std::int64_t height) {
  return series({Exponent(0), Exponent(4), 2, 4, height, true});
}

ValSeries Sampler::infinitesimal(Exponent v, std::int64_t height) {
  return series({v, v + Exponent(3), 2, 3, height, true});
}

ValSeries Sampler::infinitesimal(std::int64_t height) {
  return infinitesimal(Exponent(integer(1, 4), 2), height);
}

std::array<ValSeries, 3> Sampler::unit_vector(bool standard, std::int64_t height) {
  ValSeries u(QuadExt(rational(height)));
  ValSeries v(QuadExt(rational(height)));
  if (!standard) {
    u += infinitesimal(height);
    v += infinitesimal(height);
  }
  const ValSeries s = u * u + v * v;
  const ValSeries d = inv(s + ValSeries(1));
  return {ValSeries(2) * u * d, ValSeries(2) * v * d, (s - ValSeries(1)) * d};
}

std::array<ValSeries, 4> Sampler::unit_vector4(bool standard, std::int64_t height) {
  std::array<ValSeries, 3> p;
  for (auto& x : p) {
    x = ValSeries(QuadExt(rational(height)));
    if (!standard) x += infinitesimal(height);
  }
  const ValSeries s = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  const ValSeries d = inv(s + ValSeries(1));
  return {ValSeries(2) * p[0] * d, ValSeries(2) * p[1] * d, ValSeries(2) * p[2] * d,
          (s - ValSeries(1)) * d};
}

}  // namespace infinilie

#include "doctest.h"

#include "infinilie/groups.hpp"
#include "infinilie/parse.hpp"
#include "infinilie/rotations.hpp"
#include "infinilie/sampling.hpp"

using namespace infinilie;

namespace {

const Axis kZ{ValSeries(0), ValSeries(0), ValSeries(1)};

SeriesMatrix diag3(int a, int b, int c) {
  SeriesMatrix m = SeriesMatrix::Zero(3, 3);
  m(0, 0) = ValSeries(a);
  m(1, 1) = ValSeries(b);
  m(2, 2) = ValSeries(c);
  return m;
}

// Skew 3×3 matrix with infinitesimal entries.
SeriesMatrix small_skew(Sampler& s) { return skew({s.infinitesimal(), s.infinitesimal(), s.infinitesimal()}); }

// Anti-Hermitian traceless 2×2 matrix with infinitesimal entries.
GaussSeriesMatrix small_su2(Sampler& s) {
  const GaussSeries i(GaussScalar::i());
  const GaussSeries a = to_gauss(s.infinitesimal()), b = to_gauss(s.infinitesimal()),
                    c = to_gauss(s.infinitesimal());
  GaussSeriesMatrix x(2, 2);
  x << i * a, b + i * c, -b + i * c, -(i * a);
  return x;
}

}  // namespace

TEST_CASE("group dimensions and names") {
  CHECK(GroupSpec::so(3).dim() == 3);
  CHECK(GroupSpec::so(5).dim() == 10);
  CHECK(GroupSpec::su(3).dim() == 8);
  const GroupSpec p = GroupSpec::parse("so3xsu2");
  CHECK(p.dim() == 6);
  CHECK(p.matrix_size() == 5);
  CHECK(p.name() == "SO(3)xSU(2)");
  CHECK_THROWS_AS(GroupSpec::parse("sp4"), Error);
}

TEST_CASE("matrix inverse") {
  const SeriesMatrix id = identity<ValSeries>(2);
  CHECK(is_identity<ValSeries>(mat_inv<ValSeries>(id)));
  SeriesMatrix d = id;
  d(0, 0) = parse_expr("1 + e");
  const SeriesMatrix di = mat_inv<ValSeries>(d);
  CHECK(is_identity<ValSeries>(d * di));
  CHECK(di(0, 0) == parse_expr("(1 + e)^(-1)"));
  SeriesMatrix all_eps(2, 2);
  all_eps.fill(ValSeries::epsilon());
  CHECK_THROWS_AS(mat_inv<ValSeries>(all_eps), SingularMatrix);
}

TEST_CASE("membership") {
  const GroupSpec so3 = GroupSpec::so(3);
  CHECK(in_group(so3, identity<ValSeries>(3)));
  CHECK_FALSE(in_group(so3, diag3(1, 1, -1)));
  const SeriesMatrix r = rho(ValSeries::epsilon(), kZ);
  CHECK(in_group(so3, r));
  CHECK(in_G00(so3, r));
  CHECK(in_G00(so3, identity<ValSeries>(3)));
  CHECK_FALSE(in_G00(so3, rho(ValSeries(QuadExt(Rational(1, 2))), kZ)));
  CHECK_THROWS_AS(in_group(so3, identity<ValSeries>(2)), DomainError);
}

TEST_CASE("standard part of matrices") {
  SeriesMatrix m = identity<ValSeries>(3);
  m(0, 1) = parse_expr("e - e^2");
  m(1, 0) = parse_expr("-e");
  CHECK(is_identity<ValSeries>(st_matrix<ValSeries>(m)));
  const SeriesMatrix q = rho(ValSeries(QuadExt(Rational(1, 3))), {ValSeries(0), ValSeries(1), ValSeries(0)});
  CHECK(equal<ValSeries>(st_matrix<ValSeries>(q), q));
  m(2, 2) = parse_expr("e^(-1)");
  CHECK_THROWS_WITH_AS(st_matrix<ValSeries>(m), doctest::Contains("unbounded entry"), DomainError);
}

TEST_CASE("standard part is multiplicative on samples") {
  Sampler s(31);
  const GroupSpec so3 = GroupSpec::so(3);
  for (int k = 0; k < 50; ++k) {
    ValSeries ta(QuadExt(s.rational(5)));
    ta += s.infinitesimal();
    ValSeries tb(QuadExt(s.rational(5)));
    tb += s.infinitesimal();
    const SeriesMatrix a = rho(ta, s.unit_vector(false));
    const SeriesMatrix b = rho(tb, s.unit_vector(true));
    const SeriesMatrix sa = st_matrix<ValSeries>(a), sb = st_matrix<ValSeries>(b);
    REQUIRE(equal<ValSeries>(st_matrix<ValSeries>(a * b), sa * sb));
    REQUIRE(in_group(so3, sa));
    REQUIRE(in_group(so3, SeriesMatrix(a * b)));
    REQUIRE(in_group(so3, mat_inv<ValSeries>(a)));
  }
}

TEST_CASE("infinitesimal subgroup is normal and torsion-free on samples") {
  Sampler s(32);
  const GroupSpec so3 = GroupSpec::so(3);
  for (int k = 0; k < 30; ++k) {
    const SeriesMatrix g = rho(ValSeries(QuadExt(s.rational(7))), s.unit_vector(s.coin()));
    const SeriesMatrix u = cayley<ValSeries>(small_skew(s));
    REQUIRE(in_G00(so3, conjugate<ValSeries>(u, g, g.transpose())));
    for (int p = 1; p <= 6; ++p) REQUIRE_FALSE(is_identity<ValSeries>(mat_pow<ValSeries>(u, p)));
  }
}

TEST_CASE("cayley transform") {
  CHECK(is_identity<ValSeries>(cayley<ValSeries>(SeriesMatrix::Zero(3, 3))));
  SeriesMatrix x = SeriesMatrix::Zero(2, 2);
  x(0, 1) = ValSeries::epsilon();
  x(1, 0) = -ValSeries::epsilon();
  const SeriesMatrix c = cayley<ValSeries>(x);
  const ValSeries d = inv(parse_expr("1 + e^2"));
  CHECK(c(0, 0) == parse_expr("1 - e^2") * d);
  CHECK(c(0, 1) == parse_expr("2*e") * d);
  CHECK(c(1, 0) == -parse_expr("2*e") * d);
  CHECK(in_G00(GroupSpec::so(2), c));
  SeriesMatrix bad = identity<ValSeries>(2);
  CHECK_THROWS_AS(cayley<ValSeries>(bad), DomainError);
  SeriesMatrix sing = SeriesMatrix::Zero(2, 2);
  sing(0, 1) = ValSeries(1);
  sing(1, 0) = ValSeries(-1);
  CHECK_NOTHROW(cayley<ValSeries>(sing));
  CHECK_THROWS_WITH_AS(cayley_inv<ValSeries>(diag3(-1, -1, 1)), doctest::Contains("chart domain"), DomainError);
}

TEST_CASE("cayley chart round trips on samples") {
  Sampler s(33);
  for (int k = 0; k < 40; ++k) {
    const SeriesMatrix x = small_skew(s);
    const SeriesMatrix c = cayley<ValSeries>(x);
    REQUIRE(in_G00(GroupSpec::so(3), c));
    REQUIRE(equal<ValSeries>(cayley_inv<ValSeries>(c), x));
    const GaussSeriesMatrix y = small_su2(s);
    const GaussSeriesMatrix cy = cayley<GaussSeries>(y);
    REQUIRE(in_G00(GroupSpec::su(2), cy));
    REQUIRE(equal<GaussSeries>(cayley_inv<GaussSeries>(cy), y));
  }
}

TEST_CASE("product law") {
  const GroupSpec so3 = GroupSpec::so(3), su2 = GroupSpec::su(2);
  const GaussSeriesMatrix id = identity<GaussSeries>(5);
  auto [whole, blocks] = product_G00_check(so3, su2, id);
  CHECK(whole);
  CHECK(blocks);
  Sampler s(34);
  const GaussSeriesMatrix inf3 = to_gauss(cayley<ValSeries>(small_skew(s)));
  const GaussSeriesMatrix inf2 = cayley<GaussSeries>(small_su2(s));
  std::tie(whole, blocks) = product_G00_check(so3, su2, block_diag<GaussSeries>(inf3, inf2));
  CHECK(whole);
  CHECK(blocks);
  const GaussSeriesMatrix big = to_gauss(rho(ValSeries(QuadExt(Rational(1, 2))), kZ));
  std::tie(whole, blocks) = product_G00_check(so3, su2, block_diag<GaussSeries>(big, inf2));
  CHECK_FALSE(whole);
  CHECK_FALSE(blocks);
  CHECK_THROWS_AS(product_G00_check(so3, su2, identity<GaussSeries>(4)), DomainError);
}

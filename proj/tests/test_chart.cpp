#include "doctest.h"

#include "infinilie/chart.hpp"
#include "infinilie/parse.hpp"

using namespace infinilie;

namespace {

ValSeries R(long p, long q = 1) { return ValSeries(QuadExt(Rational(p, q))); }
const Axis kZ{R(0), R(0), R(1)};
const Axis kTilted{R(3, 5), R(0), R(4, 5)};

std::vector<ValSeries> random_params(Sampler& s, int n) {
  std::vector<ValSeries> t;
  for (int i = 0; i < n; ++i) t.push_back(s.infinitesimal(s.coin() ? Exponent(3, 2) : Exponent(2), 5));
  return t;
}

bool same(const std::vector<ValSeries>& a, const std::vector<ValSeries>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

std::vector<ValSeries> zeros(int n) { return std::vector<ValSeries>(static_cast<std::size_t>(n), ValSeries(0)); }

}  // namespace

TEST_CASE("lie coordinates") {
  for (const char* name : {"so3", "so5", "su2", "su3"}) {
    CAPTURE(name);
    const GroupSpec g = GroupSpec::parse(name);
    const LieCoordinates co(algebra_of(g));
    Sampler s(61);
    Vec<ValSeries> x(co.dim());
    for (Eigen::Index k = 0; k < x.size(); ++k) x(k) = s.infinitesimal();
    if (g.is_complex()) {
      const GaussSeriesMatrix y = co.element<GaussSeries>(x);
      CHECK(equal<GaussSeries>(adjoint<GaussSeries>(y), GaussSeriesMatrix(-y)));
      const Vec<ValSeries> back = co(y);
      for (Eigen::Index k = 0; k < x.size(); ++k) CHECK(back(k) == x(k));
      CHECK(is_identity<ValSeries>(co.adjoint_matrix<GaussSeries>(identity<GaussSeries>(g.n))));
    } else {
      const SeriesMatrix y = co.element<ValSeries>(x);
      CHECK(equal<ValSeries>(y.transpose(), SeriesMatrix(-y)));
      const Vec<ValSeries> back = co(y);
      for (Eigen::Index k = 0; k < x.size(); ++k) CHECK(back(k) == x(k));
      CHECK(is_identity<ValSeries>(co.adjoint_matrix<ValSeries>(identity<ValSeries>(g.n))));
    }
  }
  CHECK_THROWS_AS(algebra_of(GroupSpec::parse("so3xsu2")), DomainError);
}

TEST_CASE("arcs") {
  const GroupSpec so3 = GroupSpec::so(3);
  const ArcJ<ValSeries> a = make_arc<ValSeries>(so3, kTilted);
  const ValSeries e = ValSeries::epsilon();
  CHECK(equal<ValSeries>(a.point(e), rho(e, kTilted)));
  CHECK(centralizer_membership(rho(e, kTilted), a.point(parse_expr("e^2 - 3*e^(5/2)"))));
  const ArcJ<GaussSeries> b = make_arc<GaussSeries>(GroupSpec::su(2), kTilted);
  const ExactMatrix x = b.tangent;
  CHECK(equal<GaussScalar>(ExactMatrix(x * x * x), ExactMatrix(-GaussScalar(b.q) * x)));
  CHECK(in_G00(GroupSpec::su(2), b.point(e)));
  CHECK_THROWS_AS(make_arc<GaussSeries>(so3, kZ), DomainError);
  CHECK_THROWS_AS(make_arc<ValSeries>(so3, {e, R(0), R(1)}), DomainError);
}

TEST_CASE("random infinitesimal elements") {
  Sampler s(62);
  for (const char* name : {"so3", "so5"}) {
    const GroupSpec g = GroupSpec::parse(name);
    CHECK(in_G00(g, random_G00<ValSeries>(g, s, Exponent(1, 2))));
  }
  for (const char* name : {"su2", "su3"}) {
    const GroupSpec g = GroupSpec::parse(name);
    CHECK(in_G00(g, random_G00<GaussSeries>(g, s, Exponent(1))));
  }
}

TEST_CASE("conjugator certificates") {
  const GroupSpec so3 = GroupSpec::so(3);
  const ArcJ<ValSeries> arc = make_arc<ValSeries>(so3, kZ);
  const ChartData<ValSeries> cd = find_conjugators(so3, arc, 5);
  REQUIRE(cd.conjugators.size() == 3);
  CHECK(is_identity<ValSeries>(cd.conjugators[0]));
  CHECK(Exponent(0) < cd.det_val);
  CHECK(cd.det_val * Exponent(2) < cd.trunc);
  // Columns differ from the first only infinitesimally, yet the determinant is nonzero.
  for (Eigen::Index c = 1; c < 3; ++c) {
    const SeriesMatrix diff = cd.jacobian.col(c) - cd.jacobian.col(0);
    CHECK(Exponent(0) < min_order(diff));
  }
  const ChartData<ValSeries> again = find_conjugators(so3, arc, 5);
  CHECK(again.det_val == cd.det_val);
  CHECK(equal<ValSeries>(again.conjugators[2], cd.conjugators[2]));

  const GroupSpec su2 = GroupSpec::su(2);
  const ChartData<GaussSeries> cs = find_conjugators(su2, make_arc<GaussSeries>(su2, kTilted), 5);
  CHECK(cs.conjugators.size() == 3);
  CHECK(cs.det_val * Exponent(2) < cs.trunc);

  const ArcJ<ValSeries> flat = make_arc<ValSeries>(so3, {R(0), R(0), R(0)});
  CHECK_THROWS_WITH_AS(find_conjugators(so3, flat, 5), doctest::Contains("zero tangent"), DomainError);
}

TEST_CASE("chart map") {
  const GroupSpec so3 = GroupSpec::so(3);
  const ArcJ<ValSeries> arc = make_arc<ValSeries>(so3, kTilted);
  const ChartData<ValSeries> cd = find_conjugators(so3, arc, 9);
  CHECK(is_identity<ValSeries>(chart_phi(cd, zeros(3))));
  const ValSeries e = ValSeries::epsilon();
  CHECK(equal<ValSeries>(chart_phi(cd, {e, R(0), R(0)}), rho(e, kTilted)));
  Sampler s(63);
  for (int k = 0; k < 5; ++k) CHECK(in_G00(so3, chart_phi(cd, random_params(s, 3))));
  CHECK_THROWS_AS(chart_phi(cd, {R(1, 2), R(0), R(0)}), DomainError);
  CHECK_THROWS_AS(chart_phi(cd, {e, e}), DomainError);
}

TEST_CASE("chart inversion") {
  const GroupSpec so3 = GroupSpec::so(3);
  const ChartData<ValSeries> cd = find_conjugators(so3, make_arc<ValSeries>(so3, kZ), 11);
  const ChartSolution id = chart_solve(cd, identity<ValSeries>(3));
  CHECK(same(id.t, zeros(3)));
  Sampler s(64);
  for (int k = 0; k < 4; ++k) {
    const std::vector<ValSeries> t = random_params(s, 3);
    const ChartSolution sol = chart_solve(cd, chart_phi(cd, t));
    CHECK(sol.grade == cd.trunc - cd.det_val * Exponent(2));
    CHECK(same(sol.t, t));
  }
  const SeriesMatrix shallow = rho(parse_expr("e^(1/2)"), kZ);
  CHECK_THROWS_WITH_AS(chart_solve(cd, shallow), doctest::Contains("headroom"), PrecisionError);
  CHECK_THROWS_AS(chart_solve(cd, rho(R(1, 2), kZ)), DomainError);

  const GroupSpec su2 = GroupSpec::su(2);
  const ChartData<GaussSeries> cs = find_conjugators(su2, make_arc<GaussSeries>(su2, kTilted), 11);
  for (int k = 0; k < 3; ++k) {
    const std::vector<ValSeries> t = random_params(s, 3);
    CHECK(same(chart_solve(cs, chart_phi(cs, t)).t, t));
  }
}

TEST_CASE("pulled-back operation") {
  const GroupSpec so3 = GroupSpec::so(3);
  const ChartData<ValSeries> cd = find_conjugators(so3, make_arc<ValSeries>(so3, kZ), 13);
  Sampler s(65);
  const std::vector<ValSeries> a = random_params(s, 3), b = random_params(s, 3), c = random_params(s, 3);
  CHECK(same(star(cd, a, zeros(3)).t, a));
  const ChartSolution ainv = chart_solve(cd, SeriesMatrix(chart_phi(cd, a).transpose()));
  CHECK(same(star(cd, a, ainv.t).t, zeros(3)));
  const ChartSolution ab = star(cd, a, b), bc = star(cd, b, c);
  CHECK(same(star(cd, ab.t, c).t, star(cd, a, bc.t).t));
  // Along the first coordinate the operation is addition of tan-half-angles.
  const ValSeries x = s.infinitesimal(Exponent(3, 2), 5), y = s.infinitesimal(Exponent(2), 5);
  const ChartSolution xy = star(cd, {x, R(0), R(0)}, {y, R(0), R(0)});
  CHECK(xy.t[0] == (x + y) * inv(R(1) - x * y));
  CHECK(xy.t[1].is_zero());
  CHECK(xy.t[2].is_zero());
}

TEST_CASE("adjoint representation") {
  const AdjointReport r = adjoint_embedding_check(GroupSpec::so(5), 4, 3);
  CHECK(r.identity_ok);
  CHECK(r.pass());
  CHECK(adjoint_embedding_check(GroupSpec::su(2), 4, 3).pass());
}

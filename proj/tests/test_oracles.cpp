#include <fstream>

#include "doctest.h"

#include "infinilie/groups.hpp"
#include "infinilie/json_io.hpp"
#include "infinilie/lie.hpp"
#include "infinilie/parse.hpp"
#include "infinilie/rotations.hpp"

using namespace infinilie;

// Frozen values from tests/oracles/gen_oracles.py (sympy).

namespace {

const Json& oracles() {
  static const Json j = [] {
    std::ifstream in(INFINILIE_ORACLES);
    REQUIRE(in.good());
    return Json::parse(in);
  }();
  return j;
}

ValSeries R(long p, long q = 1) { return ValSeries(QuadExt(Rational(p, q))); }
QuadExt q_of(const Json& s) { return QuadExt(parse_rational(s.get<std::string>())); }

SeriesMatrix frozen_matrix(const Json& j) {
  SeriesMatrix m(j["rows"].get<Eigen::Index>(), j["cols"].get<Eigen::Index>());
  for (Eigen::Index k = 0; k < m.size(); ++k) m(k / m.cols(), k % m.cols()) = series_from_json(j["entries"][k]);
  return m;
}

ExactMatrix frozen_gauss(const Json& j, Eigen::Index n) {
  ExactMatrix m(n, n);
  for (Eigen::Index k = 0; k < n * n; ++k) m(k / n, k % n) = GaussScalar(q_of(j[k][0]), q_of(j[k][1]));
  return m;
}

void check_matrix(const SeriesMatrix& got, const Json& frozen) {
  const SeriesMatrix want = frozen_matrix(frozen);
  REQUIRE(got.rows() == want.rows());
  for (Eigen::Index r = 0; r < got.rows(); ++r)
    for (Eigen::Index c = 0; c < got.cols(); ++c) {
      INFO("entry " << r << "," << c << ": " << to_expr(got(r, c)) << " vs " << to_expr(want(r, c)));
      CHECK(got(r, c) == want(r, c));
    }
}

}  // namespace

TEST_CASE("oracle: quadratic scalars") {
  const Json& s = oracles()["scalar"];
  const Json& v = s["inv_1_plus_sqrt2"];
  const QuadExt want(parse_rational(v["a"]), parse_rational(v["b"]), v["d"].get<std::int64_t>());
  CHECK(inv(QuadExt(Rational(1), Rational(1), 2)) == want);
  CHECK(sign(QuadExt(Rational(3), Rational(-2), 2)) == s["sign_3_minus_2sqrt2"].get<int>());
  CHECK(sign(QuadExt(Rational(1), Rational(-1), 2)) == s["sign_1_minus_sqrt2"].get<int>());
}

TEST_CASE("oracle: series inverses and roots") {
  const Json& s = oracles()["series"];
  {
    const ContextGuard g(Context{Exponent(4), 12, 1});
    CHECK(inv(parse_expr("1 + e")) == series_from_json(s["inv_1_plus_e_trunc4"]));
  }
  {
    const ContextGuard g(Context{Exponent(3), 12, 1});
    CHECK(sqrt(parse_expr("1 + e")) == series_from_json(s["sqrt_1_plus_e_trunc3"]));
  }
  const ContextGuard g(Context{Exponent(8), 12, 1});
  CHECK(parse_expr("(1+e)^(-1)") == series_from_json(s["inv_1_plus_e_trunc8"]));
  CHECK(sqrt(parse_expr("1 + e")) == series_from_json(s["sqrt_1_plus_e_trunc8"]));
  SeriesMatrix d = SeriesMatrix::Identity(2, 2);
  d(0, 0) = parse_expr("1 + e");
  CHECK(mat_inv<ValSeries>(d)(0, 0) == series_from_json(s["inv_diag_00_trunc8"]));
}

TEST_CASE("oracle: rotation matrices against Rodrigues") {
  const Json& m = oracles()["matrix"];
  const ContextGuard g(Context{Exponent(8), 12, 1});
  const ValSeries eps = ValSeries::epsilon();
  check_matrix(rho(eps, {R(0), R(0), R(1)}), m["rho_e_z"]);
  check_matrix(rho(eps * eps, {R(3, 5), R(4, 5), R(0)}), m["rho_e2_tilted"]);
  check_matrix(rho(R(1, 2), {R(0), R(0), R(1)}), m["rho_half_z"]);
  SeriesMatrix x = SeriesMatrix::Zero(2, 2);
  x(0, 1) = eps;
  x(1, 0) = -eps;
  check_matrix(cayley<ValSeries>(x), m["cayley_2x2"]);
}

TEST_CASE("oracle: spin_pi against sympy quaternions") {
  for (const auto& [name, c] : oracles()["spin_pi"].items()) {
    INFO(name);
    const auto& q = c["q"];
    const Quaternion quat{ValSeries(q_of(q[0])), ValSeries(q_of(q[1])), ValSeries(q_of(q[2])), ValSeries(q_of(q[3]))};
    const SeriesMatrix got = spin_pi(quat);
    for (Eigen::Index k = 0; k < 9; ++k) CHECK(got(k / 3, k % 3) == ValSeries(q_of(c["matrix"][k])));
  }
}

TEST_CASE("oracle: so(3) root data") {
  const Json& o = oracles()["lie"]["so3"];
  const LieAlgebra g = build_algebra(LieFamily::SO, 3);
  RootDatum rd = root_decomposition(g);
  const ExactMatrix E = frozen_gauss(o["E"], 3);
  const GaussScalar alpha(q_of(o["alpha_H"][0]), q_of(o["alpha_H"][1]));

  // The library's root with α(L₃) = i spans the same line as the frozen E.
  std::size_t r = rd.roots.size();
  for (std::size_t k = 0; k < rd.roots.size(); ++k)
    if (rd.roots[k].values.size() == 1 && rd.roots[k].values[0] == alpha) r = k;
  REQUIRE(r < rd.roots.size());
  CHECK(span_equal({rd.roots[r].vec}, {E}));
  CHECK(negativity_check(rd, r) == -1);
  CHECK(parse_rational(o["negativity_value"]) < 0);

  rd.roots[r].vec = E;
  const RootUV uv = uv_from_root(rd, r);
  CHECK(equal<GaussScalar>(uv.U, frozen_gauss(o["U"], 3)));
  CHECK(equal<GaussScalar>(uv.V, frozen_gauss(o["V"], 3)));
  CHECK(equal<GaussScalar>(uv.W, frozen_gauss(o["W"], 3)));
  const SO3Triple t = normalize_triple(uv);
  CHECK(equal<GaussScalar>(t.H, frozen_gauss(o["triple"]["H"], 3)));
  CHECK(equal<GaussScalar>(t.U, frozen_gauss(o["triple"]["U"], 3)));
  CHECK(equal<GaussScalar>(t.V, frozen_gauss(o["triple"]["V"], 3)));
  CHECK(triple_relations_hold(t));
}

#include "doctest.h"

#include "infinilie/parse.hpp"
#include "infinilie/rotations.hpp"
#include "infinilie/sampling.hpp"

using namespace infinilie;

namespace {

ValSeries R(long p, long q = 1) { return ValSeries(QuadExt(Rational(p, q))); }
const Axis kX{R(1), R(0), R(0)};
const Axis kZ{R(0), R(0), R(1)};

Quaternion random_unit(Sampler& s, bool standard) {
  const auto v = s.unit_vector4(standard);
  return {v[3], v[0], v[1], v[2]};
}

ValSeries random_param(Sampler& s) {
  ValSeries t = R(s.integer(-5, 5), s.integer(1, 5));
  if (s.coin()) t += s.infinitesimal();
  return t;
}

}  // namespace

TEST_CASE("rho examples") {
  CHECK(is_identity<ValSeries>(rho(R(0), kX)));
  const ValSeries e = ValSeries::epsilon();
  const SeriesMatrix m = rho(e, kZ);
  const ValSeries d = inv(R(1) + e * e);
  CHECK(m(0, 0) == (R(1) - e * e) * d);
  CHECK(m(0, 1) == -(R(2) * e * d));
  CHECK(m(1, 0) == R(2) * e * d);
  CHECK(m(1, 1) == m(0, 0));
  CHECK(m(2, 2) == R(1));
  CHECK(in_G00(GroupSpec::so(3), m));
  const Axis L{R(3, 5), R(4, 5), R(0)};
  CHECK(equal<ValSeries>(rho(-e, negate(L)), rho(e, L)));
  // ρ agrees with the Cayley transform of t·K(L).
  CHECK(equal<ValSeries>(cayley<ValSeries>(skew(L) * e), rho(e, L)));
}

TEST_CASE("rho lands in SO(3) on samples") {
  Sampler s(41);
  for (int k = 0; k < 50; ++k) {
    const SeriesMatrix m = rho(random_param(s), s.unit_vector(s.coin()));
    REQUIRE(in_group(GroupSpec::so(3), m));
  }
}

TEST_CASE("axis and angle") {
  const ValSeries e = ValSeries::epsilon();
  const AxisAngle a = axis_angle(rho(e, kZ));
  CHECK(a.t == e);
  CHECK(a.axis[2] == R(1));
  const AxisAngle b = axis_angle(rho(-e, kZ));
  CHECK(b.t == -e);
  const Axis L{R(3, 5), R(4, 5), R(0)};
  const AxisAngle c = axis_angle(rho(e * e, L));
  CHECK(c.t == e * e);
  CHECK(c.axis[0] == R(3, 5));
  CHECK(equal<ValSeries>(rho(c.t, c.axis), rho(e * e, L)));
  CHECK_THROWS_WITH_AS(axis_angle(identity<ValSeries>(3)), doctest::Contains("axis undetermined"), DomainError);
  SeriesMatrix flip = SeriesMatrix::Zero(3, 3);
  flip(0, 0) = R(-1);
  flip(1, 1) = R(-1);
  flip(2, 2) = R(1);
  CHECK_THROWS_WITH_AS(axis_angle(flip), doctest::Contains("axis undetermined"), DomainError);
}

TEST_CASE("axis and angle round trip on samples") {
  Sampler s(42);
  for (int k = 0; k < 40; ++k) {
    const ValSeries t = random_param(s);
    if (t.is_zero()) continue;
    const SeriesMatrix m = rho(t, s.unit_vector(s.coin()));
    const AxisAngle a = axis_angle(m);
    REQUIRE(equal<ValSeries>(rho(a.t, a.axis), m));
  }
}

TEST_CASE("spin cover") {
  CHECK(is_identity<ValSeries>(spin_pi(Quaternion::one())));
  const SeriesMatrix k = spin_pi({R(0), R(0), R(0), R(1)});
  CHECK(k(0, 0) == R(-1));
  CHECK(k(1, 1) == R(-1));
  CHECK(k(2, 2) == R(1));
  CHECK_THROWS_AS(spin_pi({R(2), R(0), R(0), R(0)}), DomainError);
  Sampler s(43);
  for (int n = 0; n < 40; ++n) {
    const Quaternion p = random_unit(s, s.coin()), q = random_unit(s, s.coin());
    REQUIRE(equal<ValSeries>(spin_pi(p * q), spin_pi(p) * spin_pi(q)));
    REQUIRE(equal<ValSeries>(spin_pi(-q), spin_pi(q)));
    const Axis v = s.unit_vector(false);
    REQUIRE(quat_rotate(q, v) == mat_vec(spin_pi(q), v));
    // Adjoint action on so(3) in the basis (L₁, L₂, L₃) is the matrix itself.
    const SeriesMatrix g = spin_pi(q);
    REQUIRE(unskew(g * skew(v) * g.transpose()) == mat_vec(g, v));
  }
}

TEST_CASE("conjugation equivariance") {
  const ValSeries e = ValSeries::epsilon();
  CHECK(conj_equivariance_check(e, kZ, identity<ValSeries>(3)));
  SeriesMatrix flip = SeriesMatrix::Zero(3, 3);
  flip(0, 0) = R(-1);
  flip(1, 1) = R(-1);
  flip(2, 2) = R(1);
  CHECK(conj_equivariance_check(e, kZ, flip));
  Sampler s(44);
  for (int k = 0; k < 40; ++k) {
    const SeriesMatrix g = rho(random_param(s), s.unit_vector(s.coin()));
    REQUIRE(conj_equivariance_check(random_param(s), s.unit_vector(s.coin()), g));
  }
}

TEST_CASE("centralizers and their order") {
  const ValSeries e = ValSeries::epsilon();
  const SeriesMatrix g = rho(e, kZ);
  CHECK(centralizer_membership(g, g));
  CHECK(centralizer_membership(g, rho(R(1, 3), kZ)));
  CHECK_FALSE(centralizer_membership(g, rho(e, kX)));
  CHECK(centralizer_order(g, rho(e, kZ), rho(e * e, kZ)) == SeriesOrder::GT);
  CHECK(centralizer_order(g, g, g) == SeriesOrder::EQ_mod_trunc);
  CHECK(centralizer_order(rho(-e, kZ), rho(e, kZ), rho(e * e, kZ)) == SeriesOrder::GT);
  CHECK_THROWS_AS(centralizer_order(g, rho(e, kX), g), DomainError);
  Sampler s(45);
  for (int k = 0; k < 30; ++k) {
    const SeriesMatrix x = rho(s.infinitesimal(), kZ), y = rho(s.infinitesimal(), kZ),
                       z = rho(s.infinitesimal(), kZ);
    const SeriesOrder o = centralizer_order(g, x, y);
    REQUIRE(centralizer_order(g, x * z, y * z) == o);
  }
}

TEST_CASE("scalar part facts") {
  Sampler s(46);
  const Quaternion a = random_unit(s, true);
  const ScalarPartReport same = scalar_part_facts(a, a, {random_unit(s, false)});
  CHECK_FALSE(same.skipped);
  CHECK(same.equal);
  CHECK(same.sign == 0);
  CHECK(same.equality_iff);
  CHECK(same.conjugation);
  // Same scalar part: rotate the vector part by a rational rotation.
  const Axis vb = mat_vec(rho(R(1, 2), kZ), a.vec());
  const Quaternion b{a.w, vb[0], vb[1], vb[2]};
  const ScalarPartReport diff = scalar_part_facts(a, b, {});
  CHECK(diff.sign == 1);
  CHECK(diff.inequality);
  CHECK(diff.equality_iff);
  CHECK(scalar_part_facts(a, Quaternion::one(), {}).skipped);
}

TEST_CASE("commutator solver") {
  const CommutatorSolution triv = commutator_solve(identity<ValSeries>(3));
  CHECK(is_identity<ValSeries>(triv.a));
  const ValSeries e = ValSeries::epsilon();
  const SeriesMatrix target = rho(e * e, kZ);
  const CommutatorSolution sol = commutator_solve(target);
  const SeriesMatrix comm = sol.a * sol.b * sol.a.transpose() * sol.b.transpose();
  CHECK(equal<ValSeries>(comm, target));
  CHECK(in_G00(GroupSpec::so(3), sol.a));
  CHECK(in_G00(GroupSpec::so(3), sol.b));
  CHECK(min_order(SeriesMatrix(sol.a - identity<ValSeries>(3))) == Exponent(1));
  CHECK(sol.grade == Exponent(8));
  CHECK_THROWS_AS(commutator_solve(rho(ValSeries::monomial(QuadExt(1), Exponent(5)), kZ)), PrecisionError);
  Sampler s(47);
  const Exponent vals[] = {Exponent(1, 2), Exponent(1), Exponent(3, 2), Exponent(2)};
  for (int k = 0; k < 12; ++k) {
    const SeriesMatrix tg = rho(s.infinitesimal(vals[k % 4]), s.unit_vector(s.coin()));
    const CommutatorSolution r = commutator_solve(tg);
    REQUIRE(equal<ValSeries>(SeriesMatrix(r.a * r.b * r.a.transpose() * r.b.transpose()), tg));
    REQUIRE(in_G00(GroupSpec::so(3), r.a));
    REQUIRE(in_G00(GroupSpec::so(3), r.b));
  }
}

TEST_CASE("symmetric interval probe") {
  const ValSeries e = ValSeries::epsilon();
  const IntervalProbeReport r = symmetric_interval_probe(rho(e, {R(3, 5), R(0), R(4, 5)}), 40, 7);
  CHECK(r.recorded == 160);
  CHECK(r.violations == 0);
  CHECK(r.quaternion_violations == 0);
  CHECK(r.symmetric);
  CHECK(r.contains_identity);
  CHECK(r.g_squared_recorded);
  CHECK_THROWS_AS(symmetric_interval_probe(identity<ValSeries>(3), 3, 1), DomainError);
}

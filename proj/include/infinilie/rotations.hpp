#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "infinilie/groups.hpp"

namespace infinilie {

/// w + xi + yj + zk over the series field. Unit quaternions model Spin(3).
struct Quaternion {
  ValSeries w{0}, x{0}, y{0}, z{0};

  static Quaternion one() { return {ValSeries(1), ValSeries(0), ValSeries(0), ValSeries(0)}; }
  ValSeries norm2() const { return w * w + x * x + y * y + z * z; }
  bool is_unit() const { return norm2() == ValSeries(1); }
  std::array<ValSeries, 3> vec() const { return {x, y, z}; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
/// Inverse of a unit quaternion.
inline Quaternion unit_inv(const Quaternion& q) { return conj(q); }

using Axis = std::array<ValSeries, 3>;

ValSeries dot(const Axis& a, const Axis& b);
Axis cross(const Axis& a, const Axis& b);
Axis mat_vec(const SeriesMatrix& g, const Axis& v);
Axis negate(const Axis& v);
bool is_unit(const Axis& v);

/// K(v) with K(v)w = v × w. skew(e₁), skew(e₂), skew(e₃) form the standard
/// so(3) basis.
SeriesMatrix skew(const Axis& v);
/// Inverse of skew on 3×3 skew matrices.
Axis unskew(const SeriesMatrix& k);

/// Rotation about L by the angle with tan-half-angle t.
SeriesMatrix rho(const ValSeries& t, const Axis& L);

struct AxisAngle {
  ValSeries t;
  Axis axis;
};
/// Partial inverse of rho; the first nonzero coordinate of the axis is made
/// positive.
AxisAngle axis_angle(const SeriesMatrix& m);
/// Flip (t, L) to (−t, −L) when the first nonzero coordinate of L is negative.
AxisAngle oriented(AxisAngle a);

SeriesMatrix spin_pi(const Quaternion& q);
/// Rotation of a vector by a unit quaternion: q v q⁻¹.
Axis quat_rotate(const Quaternion& q, const Axis& v);

bool conj_equivariance_check(const ValSeries& t, const Axis& L, const SeriesMatrix& g);
bool centralizer_membership(const SeriesMatrix& g, const SeriesMatrix& x);
/// Order on C(g) ∩ SO₃⁰⁰ by the angle parameter about g's oriented axis.
SeriesOrder centralizer_order(const SeriesMatrix& g, const SeriesMatrix& x, const SeriesMatrix& y);

struct ScalarPartReport {
  bool skipped = false;  // Re(a) ≠ Re(b) or non-unit input
  bool equal = false;    // a ≡ b
  int sign = 0;          // sign of Re(ab) − Re(aa)
  bool inequality = false;
  bool equality_iff = false;
  bool conjugation = true;  // Re(q a q⁻¹) ≡ Re(a) for every supplied q
};
ScalarPartReport scalar_part_facts(const Quaternion& a, const Quaternion& b,
                                   const std::vector<Quaternion>& conjugators);

struct CommutatorSolution {
  SeriesMatrix a;
  SeriesMatrix b;
  Exponent grade;  // the commutator matches the target modulo ε^grade
};
/// a, b ∈ SO₃⁰⁰ with a b a⁻¹ b⁻¹ ≡ target.
CommutatorSolution commutator_solve(const SeriesMatrix& target);

struct IntervalProbeReport {
  int samples = 0;
  int recorded = 0;       // products found in C(g)
  int violations = 0;     // recorded parameters beyond that of g²
  int quaternion_violations = 0;  // the same bound read off scalar parts
  bool symmetric = false;
  bool contains_identity = false;
  bool g_squared_recorded = false;
  ValSeries smallest;  // least nonzero |parameter| recorded
  ValSeries bound;     // parameter of g²
};
/// Samples products g^{a₁} g^{a₂} landing in C(g) and compares their angle
/// parameters with that of g².
IntervalProbeReport symmetric_interval_probe(const SeriesMatrix& g, int samples, std::uint64_t seed);

}  // namespace infinilie

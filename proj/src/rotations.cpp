#include "infinilie/rotations.hpp"

#include <algorithm>

#include "infinilie/sampling.hpp"

namespace infinilie {

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

ValSeries dot(const Axis& a, const Axis& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Axis cross(const Axis& a, const Axis& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Axis mat_vec(const SeriesMatrix& g, const Axis& v) {
  Axis out;
  for (int i = 0; i < 3; ++i) out[i] = g(i, 0) * v[0] + g(i, 1) * v[1] + g(i, 2) * v[2];
  return out;
}

Axis negate(const Axis& v) { return {-v[0], -v[1], -v[2]}; }

bool is_unit(const Axis& v) { return dot(v, v) == ValSeries(1); }

SeriesMatrix skew(const Axis& v) {
  SeriesMatrix k = SeriesMatrix::Zero(3, 3);
  k(0, 1) = -v[2];
  k(0, 2) = v[1];
  k(1, 0) = v[2];
  k(1, 2) = -v[0];
  k(2, 0) = -v[1];
  k(2, 1) = v[0];
  return k;
}

Axis unskew(const SeriesMatrix& k) { return {k(2, 1), k(0, 2), k(1, 0)}; }

SeriesMatrix rho(const ValSeries& t, const Axis& L) {
  const SeriesMatrix k = skew(L);
  const ValSeries d = inv(ValSeries(1) + t * t);
  const ValSeries s = ValSeries(2) * t * d;       // sin θ
  const ValSeries one_minus_c = s * t;            // 1 − cos θ
  return identity<ValSeries>(3) + k * s + (k * k) * one_minus_c;
}

namespace {

// Index of the first coordinate not ≡ 0, or -1.
int first_nonzero(const Axis& v) {
  for (int i = 0; i < 3; ++i)
    if (!v[i].is_zero()) return i;
  return -1;
}

Axis scaled(const Axis& v, const ValSeries& s) { return {v[0] * s, v[1] * s, v[2] * s}; }

// Half the skew part of a 3×3 matrix as a vector: sin θ · L for a rotation.
Axis skew_vector(const SeriesMatrix& m) {
  const ValSeries h = ValSeries(QuadExt(Rational(1, 2)));
  return {(m(2, 1) - m(1, 2)) * h, (m(0, 2) - m(2, 0)) * h, (m(1, 0) - m(0, 1)) * h};
}

// Homogeneous rotation matrix of a nonzero quaternion, divided by its norm.
SeriesMatrix proj_pi(const Quaternion& q) {
  const auto& [w, x, y, z] = q;
  SeriesMatrix r(3, 3);
  const ValSeries two(2);
  r << w * w + x * x - y * y - z * z, two * (x * y - w * z), two * (x * z + w * y),
      two * (x * y + w * z), w * w - x * x + y * y - z * z, two * (y * z - w * x),
      two * (x * z - w * y), two * (y * z + w * x), w * w - x * x - y * y + z * z;
  return r * inv(q.norm2());
}

void require_3x3(const SeriesMatrix& m, const char* what) {
  if (m.rows() != 3 || m.cols() != 3) throw DomainError(std::string(what) + ": expected a 3x3 matrix");
}

}  // namespace

AxisAngle oriented(AxisAngle a) {
  const int k = first_nonzero(a.axis);
  if (k >= 0 && sign(a.axis[static_cast<std::size_t>(k)]) < 0) {
    a.t = -a.t;
    a.axis = negate(a.axis);
  }
  return a;
}

AxisAngle axis_angle(const SeriesMatrix& m) {
  require_3x3(m, "axis_angle");
  if (is_identity(m)) throw DomainError("axis undetermined: identity rotation");
  const Axis w = skew_vector(m);
  if (first_nonzero(w) < 0) throw DomainError("axis undetermined: involution");
  const ValSeries c = (m.trace() - ValSeries(1)) * ValSeries(QuadExt(Rational(1, 2)));
  const ValSeries s = sqrt(dot(w, w));
  return oriented({s * inv(ValSeries(1) + c), scaled(w, inv(s))});
}

SeriesMatrix spin_pi(const Quaternion& q) {
  if (!q.is_unit()) throw DomainError("spin_pi: quaternion is not a unit");
  const auto& [w, x, y, z] = q;
  const ValSeries one(1), two(2);
  SeriesMatrix r(3, 3);
  r << one - two * (y * y + z * z), two * (x * y - w * z), two * (x * z + w * y),
      two * (x * y + w * z), one - two * (x * x + z * z), two * (y * z - w * x),
      two * (x * z - w * y), two * (y * z + w * x), one - two * (x * x + y * y);
  return r;
}

Axis quat_rotate(const Quaternion& q, const Axis& v) {
  const Quaternion r = q * Quaternion{ValSeries(0), v[0], v[1], v[2]} * unit_inv(q);
  return r.vec();
}

bool conj_equivariance_check(const ValSeries& t, const Axis& L, const SeriesMatrix& g) {
  require_3x3(g, "conj_equivariance_check");
  const SeriesMatrix lhs = conjugate<ValSeries>(rho(t, L), g, g.transpose());
  return equal<ValSeries>(lhs, rho(t, mat_vec(g, L)));
}

bool centralizer_membership(const SeriesMatrix& g, const SeriesMatrix& x) {
  require_3x3(g, "centralizer_membership");
  require_3x3(x, "centralizer_membership");
  return equal<ValSeries>(g * x, x * g);
}

SeriesOrder centralizer_order(const SeriesMatrix& g, const SeriesMatrix& x, const SeriesMatrix& y) {
  const GroupSpec so3 = GroupSpec::so(3);
  for (const SeriesMatrix* m : {&x, &y}) {
    if (!in_G00(so3, *m) || !centralizer_membership(g, *m))
      throw DomainError("centralizer_order: argument is not in the infinitesimal centralizer");
  }
  Axis d = skew_vector(g);
  const int k = first_nonzero(d);
  if (k < 0) throw DomainError("axis undetermined: g is trivial or an involution");
  if (sign(d[static_cast<std::size_t>(k)]) < 0) d = negate(d);
  // Along a common axis, sin θ and tan(θ/2) are increasing together on the
  // infinitesimal rotations, so the skew parts decide the order.
  return cmp(dot(skew_vector(x), d), dot(skew_vector(y), d));
}

ScalarPartReport scalar_part_facts(const Quaternion& a, const Quaternion& b,
                                   const std::vector<Quaternion>& conjugators) {
  ScalarPartReport r;
  if (!a.is_unit() || !b.is_unit() || !(a.w == b.w)) {
    r.skipped = true;
    return r;
  }
  r.equal = a == b;
  r.sign = sign((a * b).w - (a * a).w);
  r.inequality = r.sign >= 0;
  r.equality_iff = (r.sign == 0) == r.equal;
  for (const Quaternion& q : conjugators) {
    if (!q.is_unit() || !((q * a * unit_inv(q)).w == a.w)) r.conjugation = false;
  }
  return r;
}

namespace {

// (I − K(a))⁻¹ = (I + K(a) + a aᵀ) / (1 + |a|²).
SeriesMatrix resolvent(const Axis& a) {
  SeriesMatrix m = identity<ValSeries>(3) + skew(a);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) += a[i] * a[j];
  return m * inv(ValSeries(1) + dot(a, a));
}

// Cayley vector of a rotation: tan(θ/2)·L = 2w / (1 + tr C), w the skew vector.
Axis cayley_vector(const SeriesMatrix& c, const ValSeries& scale) {
  const Axis w = skew_vector(c);
  return {w[0] * scale, w[1] * scale, w[2] * scale};
}

// cayley(K(a)).
SeriesMatrix cayley_axis(const Axis& a) { return (identity<ValSeries>(3) + skew(a)) * resolvent(a); }

Axis scaled_axis(const std::array<QuadExt, 3>& v, const ValSeries& s) { return {s * v[0], s * v[1], s * v[2]}; }

std::array<QuadExt, 3> cross_q(const std::array<QuadExt, 3>& a, const std::array<QuadExt, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

QuadExt norm2_q(const std::array<QuadExt, 3>& a) { return a[0] * a[0] + a[1] * a[1] + a[2] * a[2]; }

}  // namespace

// With A = cay(x·a), B = cay(y·b) the commutator has tan²(θ/2) = κ exactly when
// 2PQ = m(1+P)(1+Q), P = x²|a|², Q = y²|b|², m = 1 − (1+κ)^(-1/2).
// Taking a = ℓ × e_k and b = ℓ × a (ℓ the leading vector of the target's
// Cayley vector) makes the leading coefficient of y² a rational square.
// A half-turn about c + V then carries the commutator's Cayley vector V onto c.
CommutatorSolution commutator_solve(const SeriesMatrix& target) {
  require_3x3(target, "commutator_solve");
  const SeriesMatrix id = identity<ValSeries>(3);
  if (!in_G00(GroupSpec::so(3), target)) throw DomainError("commutator_solve: target is not in SO3^00");
  const Exponent T = precision_of(target);
  if (is_identity(target)) return {id, id, T};

  const Axis c0 = cayley_vector(target, ValSeries(2) * inv(ValSeries(1) + target.trace()));
  Exponent v = T;
  for (const auto& ci : c0) v = min(v, ci.order());
  if (!(v * Exponent(2) < T)) {
    throw PrecisionError("insufficient precision headroom: angle parameter has valuation " + v.str() +
                         ", needs < trunc/2 = " + (T / Exponent(2)).str() + "; increase trunc");
  }

  Context work = current_context();
  work.trunc = T + v * Exponent(4);
  work.ramification *= 2;
  ContextGuard guard(work);
  // The truncated Cayley vector is itself an exact element; solve for it.
  Axis c;
  for (int i = 0; i < 3; ++i) c[i] = ValSeries(c0[i].terms(), work.trunc);

  std::array<QuadExt, 3> lead;
  for (int i = 0; i < 3; ++i) lead[i] = c[i].coeff(v);
  std::array<QuadExt, 3> a{};
  for (int k = 0; k < 3; ++k) {
    std::array<QuadExt, 3> e{};
    e[k] = QuadExt(1);
    a = cross_q(lead, e);
    if (!is_zero(a[0]) || !is_zero(a[1]) || !is_zero(a[2])) break;
  }
  const std::array<QuadExt, 3> b = cross_q(lead, a);
  const Exponent half = v / Exponent(2);

  const ValSeries one(1);
  const ValSeries x = ValSeries::monomial(QuadExt(1), half, work.trunc);
  const ValSeries kappa = dot(c, c);
  const ValSeries m = one - inv(sqrt(one + kappa));
  const ValSeries P = x * x * norm2_q(a);
  const ValSeries mp = m * (one + P);
  const ValSeries Q = mp * inv(ValSeries(2) * P - mp);
  const ValSeries y = sqrt(Q * inv(ValSeries(norm2_q(b))));

  SeriesMatrix A = cayley_axis(scaled_axis(a, x));
  SeriesMatrix B = cayley_axis(scaled_axis(b, y));
  SeriesMatrix C = A * B * A.transpose() * B.transpose();
  Axis V = cayley_vector(C, ValSeries(2) * inv(one + C.trace()));
  if (sign(dot(c, V)) < 0) {
    std::swap(A, B);
    V = negate(V);
  }
  Axis n;
  for (int i = 0; i < 3; ++i) n[i] = c[i] + V[i];
  const ValSeries s = ValSeries(2) * inv(dot(n, n));
  SeriesMatrix h = -id;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) += s * n[i] * n[j];

  CommutatorSolution sol{h * A * h, h * B * h, Exponent(0)};
  for (auto* g : {&sol.a, &sol.b})
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) (*g)(i, j) = (*g)(i, j).truncated(T);
  const SeriesMatrix residual = SeriesMatrix(sol.a * sol.b * sol.a.transpose() * sol.b.transpose()) - target;
  if (!is_zero<ValSeries>(residual)) throw PrecisionError("commutator_solve: residual above working precision; increase trunc");
  sol.grade = precision_of(residual);
  return sol;
}

IntervalProbeReport symmetric_interval_probe(const SeriesMatrix& g, int samples, std::uint64_t seed) {
  require_3x3(g, "symmetric_interval_probe");
  if (!in_G00(GroupSpec::so(3), g) || is_identity(g))
    throw DomainError("symmetric_interval_probe: g must lie in SO3^00 and differ from the identity");
  const AxisAngle ta = axis_angle(g);
  const ValSeries& t = ta.t;
  const Axis& L = ta.axis;
  const ValSeries one(1);

  // Parameter of a member of C(g) about the oriented axis L: s / (1 + c).
  auto param = [&](const SeriesMatrix& m) {
    const ValSeries c = (m.trace() - one) * ValSeries(QuadExt(Rational(1, 2)));
    return dot(skew_vector(m), L) * inv(one + c);
  };

  IntervalProbeReport r;
  r.samples = samples;
  const SeriesMatrix g2 = g * g;
  r.bound = param(g2);
  const Quaternion P{one, t * L[0], t * L[1], t * L[2]};
  const Quaternion PP = P * P;
  const ValSeries pp_re2 = PP.w * PP.w * inv(PP.norm2());
  const ValSeries trace_g = g.trace();

  std::vector<ValSeries> recorded;
  for (int k = 0; k < samples; ++k) {
    Sampler s(sub_seed(seed, "symmetric-interval", static_cast<std::uint64_t>(k)));
    SeriesMatrix a1 = identity<ValSeries>(3);
    if (k > 0) {
      ValSeries angle(QuadExt(s.rational(4)));
      if (s.coin()) angle += s.series({Exponent(1), Exponent(4), 1, 2, 3, true});
      a1 = rho(angle, s.unit_vector(true, 4));
    }
    const SeriesMatrix ga1 = conjugate<ValSeries>(g, a1, a1.transpose());
    for (const bool flip : {false, true}) {
      Axis u1 = mat_vec(a1, L);
      if (flip) u1 = negate(u1);
      const ValSeries kappa = dot(u1, L);
      const Quaternion Q1{one, t * u1[0], t * u1[1], t * u1[2]};
      const SeriesMatrix first = flip ? SeriesMatrix(proj_pi(Q1)) : ga1;
      // Conjugates g^{a₂} with g^{a₁} g^{a₂} ∈ C(g) have parameter 0 or τ.
      const ValSeries tau = ValSeries(2) * t * kappa * inv(one - t * t * kappa * kappa);
      for (const ValSeries& x : {ValSeries(0), tau}) {
        const Quaternion Q2 = conj(Q1) * Quaternion{one, x * L[0], x * L[1], x * L[2]};
        const SeriesMatrix ga2 = proj_pi(Q2);
        const SeriesMatrix prod = first * ga2;
        if (!(ga2.trace() == trace_g) || !centralizer_membership(g, prod)) continue;
        const ValSeries p = param(prod);
        if (!(p == x)) continue;
        recorded.push_back(p);
        if (p.is_zero()) r.contains_identity = true;
        if (k == 0 && !flip && p == r.bound) r.g_squared_recorded = true;
        if (sign(r.bound * r.bound - p * p) < 0) ++r.violations;
        const Quaternion X = Q1 * Q2;
        if (sign(X.w * X.w * inv(X.norm2()) - pp_re2) < 0) ++r.quaternion_violations;
        if (!p.is_zero()) {
          const ValSeries a = sign(p) < 0 ? -p : p;
          if (r.smallest.is_zero() || cmp(a, r.smallest) == SeriesOrder::LT) r.smallest = a;
        }
      }
    }
  }
  r.recorded = static_cast<int>(recorded.size());

  std::vector<ValSeries> sorted = recorded;
  auto less = [](const ValSeries& a, const ValSeries& b) { return cmp(a, b) == SeriesOrder::LT; };
  std::sort(sorted.begin(), sorted.end(), less);
  r.symmetric = true;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (!(sorted[i] == -sorted[sorted.size() - 1 - i])) r.symmetric = false;
  return r;
}

}  // namespace infinilie

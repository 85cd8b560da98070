#include "infinilie/chart.hpp"

#include <type_traits>

namespace infinilie {

namespace {

using Index = Eigen::Index;

template <class S>
constexpr bool kComplex = std::is_same_v<S, GaussSeries>;

template <class S>
S from_real(const ValSeries& x) {
  if constexpr (kComplex<S>) {
    return to_gauss(x);
  } else {
    return x;
  }
}

template <class S>
S scale(const S& x, const GaussScalar& c) {
  if constexpr (kComplex<S>) {
    return x * c;
  } else {
    return x * real_value(c);
  }
}

template <class S>
Mat<S> lift_exact(const ExactMatrix& m) {
  if constexpr (kComplex<S>) {
    return lift<GaussScalar>(m);
  } else {
    return lift<QuadExt>(m);
  }
}

ValSeries re_of(const ValSeries& x) { return x; }
ValSeries im_of(const ValSeries& x) { return ValSeries::zero(x.trunc()); }
ValSeries re_of(const GaussSeries& x) { return real_part(x); }
ValSeries im_of(const GaussSeries& x) { return imag_part(x); }

// The same element with a larger truncation.
template <class C>
Series<C> raised(const Series<C>& x, Exponent t) {
  return t < x.trunc() ? x : Series<C>(x.terms(), t);
}

template <class S>
void require_family(const GroupSpec& spec) {
  if (spec.family == Family::Product) throw DomainError("chart: product groups are not supported");
  if ((spec.family == Family::SU) != kComplex<S>) throw DomainError("chart: scalar type does not match " + spec.name());
}

QuadExt exact_value(const ValSeries& x) {
  if (x.terms().size() > 1 || (!x.terms().empty() && !(x.terms().front().exp == Exponent(0))))
    throw DomainError("arc axis must have exact entries");
  return x.terms().empty() ? QuadExt(0) : x.terms().front().coeff;
}

template <class S>
void check_in_m(const std::vector<ValSeries>& t, int n) {
  if (static_cast<int>(t.size()) != n)
    throw DomainError("chart: expected " + std::to_string(n) + " parameters, got " + std::to_string(t.size()));
  for (const auto& x : t)
    if (classify(x) != Magnitude::IN_m) throw DomainError("chart parameter not in m: " + to_expr(x));
}

template <class S>
std::vector<Mat<S>> arc_factors(const ChartData<S>& cd, const std::vector<ValSeries>& t) {
  std::vector<Mat<S>> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Mat<S>& h = cd.conjugators[i];
    if (t[i].is_zero()) {
      out.push_back(identity<S>(h.rows()));
    } else {
      out.push_back(conjugate<S>(cd.arc.point(t[i]), h, adjoint<S>(h)));
    }
  }
  return out;
}

template <class S>
Mat<S> product(const std::vector<Mat<S>>& fs, Index n) {
  Mat<S> p = identity<S>(n);
  for (const auto& f : fs) p = p * f;
  return p;
}

}  // namespace

LieAlgebra algebra_of(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::SO:
      return build_algebra(LieFamily::SO, spec.n);
    case Family::SU:
      return build_algebra(LieFamily::SU, spec.n);
    default:
      throw DomainError("no simple Lie algebra for " + spec.name());
  }
}

LieCoordinates::LieCoordinates(const LieAlgebra& g) : algebra_(g) {
  const Index n2 = static_cast<Index>(g.n) * g.n;
  const auto dim = static_cast<Index>(g.basis.size());
  Mat<QuadExt> b(2 * n2, dim);
  for (Index k = 0; k < dim; ++k) {
    const ExactMatrix& m = g.basis[static_cast<std::size_t>(k)];
    std::vector<Entry> entries;
    for (Index c = 0; c < m.cols(); ++c)
      for (Index r = 0; r < m.rows(); ++r)
        if (!is_zero(m(r, c))) entries.push_back({r, c, m(r, c)});
    sparse_basis_.push_back(std::move(entries));
    for (Index i = 0; i < n2; ++i) {
      b(i, k) = m.data()[i].re();
      b(n2 + i, k) = m.data()[i].im();
    }
  }
  const RowEchelon<QuadExt> e = row_reduce<QuadExt>(b.transpose());
  selected_ = e.pivots;
  Mat<QuadExt> sel(dim, dim);
  for (Index r = 0; r < dim; ++r) sel.row(r) = b.row(selected_[static_cast<std::size_t>(r)]);
  left_inverse_ = inverse<QuadExt>(sel);
}

template <class S>
ValSeries LieCoordinates::selected_entry(const Mat<S>& y, std::size_t k) const {
  const Index n2 = y.size();
  const Index r = selected_[k];
  return r < n2 ? re_of(y.data()[r]) : im_of(y.data()[r - n2]);
}

template <class S>
Vec<ValSeries> LieCoordinates::operator()(const Mat<S>& y) const {
  const auto dim = static_cast<Index>(selected_.size());
  std::vector<ValSeries> vals;
  for (std::size_t k = 0; k < selected_.size(); ++k) vals.push_back(selected_entry(y, k));
  const Exponent t = precision_of(y);
  Vec<ValSeries> out(dim);
  for (Index i = 0; i < dim; ++i) {
    ValSeries acc = ValSeries::zero(t);
    for (Index j = 0; j < dim; ++j)
      if (!is_zero(left_inverse_(i, j))) acc += vals[static_cast<std::size_t>(j)] * left_inverse_(i, j);
    out(i) = acc;
  }
  return out;
}

template <class S>
Mat<S> LieCoordinates::element(const Vec<ValSeries>& x) const {
  const Index n = algebra_.n;
  Mat<S> out = Mat<S>::Zero(n, n);
  for (std::size_t k = 0; k < sparse_basis_.size(); ++k) {
    const S xk = from_real<S>(x(static_cast<Index>(k)));
    for (const Entry& e : sparse_basis_[k]) out(e.row, e.col) += scale(xk, e.value);
  }
  return out;
}

template <class S>
SeriesMatrix LieCoordinates::adjoint_matrix(const Mat<S>& u) const {
  const auto dim = static_cast<Index>(sparse_basis_.size());
  const Index n = u.rows();
  const Index n2 = n * n;
  const Mat<S> ubar = conj<S>(u);
  SeriesMatrix out(dim, dim);
  for (Index k = 0; k < dim; ++k) {
    // Selected entries of u B_k u*: (a, b) ↦ Σ B(p,q) u(a,p) ū(b,q).
    std::vector<ValSeries> vals;
    for (Index r : selected_) {
      const Index idx = r < n2 ? r : r - n2;
      const Index a = idx % n, b = idx / n;
      S acc = S::zero(precision_of(u));
      for (const Entry& e : sparse_basis_[static_cast<std::size_t>(k)])
        acc += scale(u(a, e.row) * ubar(b, e.col), e.value);
      vals.push_back(r < n2 ? re_of(acc) : im_of(acc));
    }
    for (Index i = 0; i < dim; ++i) {
      ValSeries acc = ValSeries::zero(precision_of(u));
      for (Index j = 0; j < dim; ++j)
        if (!is_zero(left_inverse_(i, j))) acc += vals[static_cast<std::size_t>(j)] * left_inverse_(i, j);
      out(i, k) = acc;
    }
  }
  return out;
}

template <class S>
Mat<S> ArcJ<S>::point(const ValSeries& t) const {
  const Index n = tangent.rows();
  const ValSeries s = ValSeries(2) * t * inv(ValSeries(1) + t * t * q);
  const Mat<S> x = lift_exact<S>(tangent);
  return identity<S>(n) + x * from_real<S>(s) + (x * x) * from_real<S>(s * t);
}

template <class S>
ArcJ<S> make_arc(const GroupSpec& spec, const Axis& axis) {
  require_family<S>(spec);
  ArcJ<S> arc;
  arc.spec = spec;
  arc.axis = axis;
  const QuadExt a1 = exact_value(axis[0]), a2 = exact_value(axis[1]), a3 = exact_value(axis[2]);
  const Index n = spec.n;
  arc.tangent = ExactMatrix::Zero(n, n);
  ExactMatrix& x = arc.tangent;
  if (spec.family == Family::SO) {
    if (n < 3) throw DomainError("arc needs SO(n) with n >= 3");
    x(0, 1) = GaussScalar(-a3);
    x(0, 2) = GaussScalar(a2);
    x(1, 0) = GaussScalar(a3);
    x(1, 2) = GaussScalar(-a1);
    x(2, 0) = GaussScalar(-a2);
    x(2, 1) = GaussScalar(a1);
  } else {
    if (n < 2) throw DomainError("arc needs SU(n) with n >= 2");
    // a₁·diag(i, −i) + a₂·((0,1),(−1,0)) + a₃·((0,i),(i,0))
    x(0, 0) = GaussScalar(QuadExt(0), a1);
    x(1, 1) = GaussScalar(QuadExt(0), -a1);
    x(0, 1) = GaussScalar(a2, a3);
    x(1, 0) = GaussScalar(-a2, a3);
  }
  arc.q = a1 * a1 + a2 * a2 + a3 * a3;
  return arc;
}

template <class S>
Mat<S> random_G00(const GroupSpec& spec, Sampler& s, Exponent v, std::int64_t height) {
  require_family<S>(spec);
  const Exponent t = current_context().trunc;
  auto coeff = [&] { return ValSeries::monomial(QuadExt(s.nonzero_rational(height)), v, t); };
  const Index n = spec.n;
  if (spec.family == Family::SU && n >= 3) {
    Mat<S> out = identity<S>(n);
    for (Index j = 0; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        const S c1 = from_real<S>(coeff()), c2 = from_real<S>(coeff()), c3 = from_real<S>(coeff());
        const GaussScalar i = GaussScalar::i();
        Mat<S> y = Mat<S>::Zero(n, n);
        y(j, j) = scale(c1, i);
        y(k, k) = scale(c1, -i);
        y(j, k) = c2 + scale(c3, i);
        y(k, j) = -c2 + scale(c3, i);
        out = out * cayley<S>(y);
      }
    }
    return out;
  }
  const LieCoordinates co(algebra_of(spec));
  Vec<ValSeries> x(co.dim());
  for (Index k = 0; k < x.size(); ++k) x(k) = coeff();
  return cayley<S>(co.element<S>(x));
}

template <class S>
ChartData<S> find_conjugators(const GroupSpec& spec, const ArcJ<S>& arc, std::uint64_t seed, std::int64_t height) {
  require_family<S>(spec);
  if (is_zero<GaussScalar>(arc.tangent)) throw DomainError("degenerate arc: zero tangent");
  ChartData<S> cd{spec, arc, {}, {}, Exponent(0), current_context().trunc, seed, 0, LieCoordinates(algebra_of(spec))};
  const int n = cd.coords.dim();
  const Index m = spec.n;
  const Mat<S> x = lift_exact<S>(arc.tangent);
  const Exponent vals[] = {Exponent(1, 2), Exponent(1, 3), Exponent(1, 4), Exponent(1, 6)};
  constexpr int kBudget = 32;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    Sampler s(sub_seed(seed, "conjugators", static_cast<std::uint64_t>(attempt)));
    const Exponent v = vals[attempt % 4];
    std::vector<Mat<S>> hs{identity<S>(m)};
    SeriesMatrix jac(n, n);
    jac.col(0) = cd.coords(x);
    for (int i = 1; i < n; ++i) {
      hs.push_back(random_G00<S>(spec, s, v, height));
      jac.col(i) = cd.coords(Mat<S>(hs.back() * x * adjoint<S>(hs.back())));
    }
    const ValSeries det = determinant<ValSeries>(jac);
    if (det.is_zero() || !(det.order() * Exponent(2) < cd.trunc)) continue;
    cd.conjugators = std::move(hs);
    cd.jacobian = std::move(jac);
    cd.det_val = det.order();
    cd.attempts = attempt + 1;
    return cd;
  }
  throw PrecisionError("find_conjugators: no certified conjugator set after " + std::to_string(kBudget) +
                       " attempts; increase trunc");
}

template <class S>
Mat<S> chart_phi(const ChartData<S>& cd, const std::vector<ValSeries>& t) {
  check_in_m<S>(t, cd.coords.dim());
  return product(arc_factors(cd, t), cd.spec.n);
}

template <class S>
ChartSolution chart_solve(const ChartData<S>& cd, const Mat<S>& u) {
  const int n = cd.coords.dim();
  const Index m = cd.spec.n;
  if (u.rows() != m || u.cols() != m) throw DomainError("chart_solve: matrix size does not match " + cd.spec.name());
  if (!in_G00(cd.spec, u)) throw DomainError("chart_solve: target is not in " + cd.spec.name() + "^00");
  const Exponent T = precision_of(u);
  const Exponent grade = T - cd.det_val * Exponent(2);
  if (is_identity<S>(u)) return {std::vector<ValSeries>(static_cast<std::size_t>(n), ValSeries::zero(grade)), grade, 0};
  const Exponent depth = min_order(Mat<S>(u - identity<S>(m)));
  if (!(cd.det_val < depth)) {
    throw PrecisionError("insufficient headroom: val(u - I) = " + depth.str() + " must exceed det_val = " +
                         cd.det_val.str() + "; increase trunc");
  }

  Context work = current_context();
  work.trunc = T + cd.det_val * Exponent(2);
  ContextGuard guard(work);
  const Mat<S> uw = u.unaryExpr([&](const S& x) { return raised(x, work.trunc); });
  const Mat<S> x2 = lift_exact<S>(cd.arc.tangent) * from_real<S>(ValSeries(2));
  std::vector<Mat<S>> tangents;  // 2 h_i X h_i*
  for (const auto& h : cd.conjugators) tangents.push_back(h * x2 * adjoint<S>(h));

  std::vector<ValSeries> t(static_cast<std::size_t>(n), ValSeries::zero(work.trunc));
  constexpr int kMaxIterations = 40;
  Exponent reached(0);
  for (int it = 0; it < kMaxIterations; ++it) {
    const std::vector<Mat<S>> fs = arc_factors(cd, t);
    const Mat<S> p = product(fs, m);
    const Mat<S> rel = adjoint<S>(p) * uw;
    const Vec<ValSeries> f = cd.coords(Mat<S>(cayley_inv<S>(rel) * from_real<S>(ValSeries(2))));
    bool done = true;
    reached = T;
    for (Index k = 0; k < f.size(); ++k) {
      const ValSeries fk = f(k).truncated(T);
      if (!fk.is_zero()) {
        done = false;
        reached = min(reached, fk.order());
      }
    }
    if (done) {
      for (auto& x : t) x = x.truncated(grade);
      return {t, grade, it};
    }
    // Columns p⁻¹ ∂_i p = Q_i* (h_i 2X h_i*) Q_i / (1 + q t_i²), Q_i = A_{i+1}⋯A_n.
    SeriesMatrix jac(n, n);
    Mat<S> q = identity<S>(m);
    for (int i = n - 1; i >= 0; --i) {
      const auto ui = static_cast<std::size_t>(i);
      const ValSeries d = inv(ValSeries(1) + t[ui] * t[ui] * cd.arc.q);
      jac.col(i) = cd.coords(Mat<S>(adjoint<S>(q) * tangents[ui] * q * from_real<S>(d)));
      q = fs[ui] * q;
    }
    const Vec<ValSeries> delta = solve<ValSeries>(jac, f);
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      t[ui] = raised(ValSeries(t[ui] + delta(i)), work.trunc);
    }
  }
  throw PrecisionError("chart_solve: Newton stalled at grade " + reached.str() + "; increase trunc");
}

template <class S>
ChartSolution star(const ChartData<S>& cd, const std::vector<ValSeries>& a, const std::vector<ValSeries>& b) {
  return chart_solve(cd, Mat<S>(chart_phi(cd, a) * chart_phi(cd, b)));
}

namespace {

template <class S>
AdjointReport adjoint_check_impl(const GroupSpec& spec, int samples, std::uint64_t seed) {
  AdjointReport rep;
  rep.samples = samples;
  const LieCoordinates co(algebra_of(spec));
  const Index m = spec.n;
  rep.identity_ok = is_identity<ValSeries>(co.adjoint_matrix<S>(identity<S>(m)));
  const Exponent vals[] = {Exponent(1), Exponent(3, 2), Exponent(2)};
  for (int k = 0; k < samples; ++k) {
    Sampler s(sub_seed(seed, "adjoint", static_cast<std::uint64_t>(k)));
    const Mat<S> u = random_G00<S>(spec, s, vals[k % 3]);
    const Mat<S> w = random_G00<S>(spec, s, vals[(k + 1) % 3]);
    const SeriesMatrix au = co.adjoint_matrix<S>(u), aw = co.adjoint_matrix<S>(w);
    if (!equal<ValSeries>(co.adjoint_matrix<S>(Mat<S>(u * w)), SeriesMatrix(au * aw))) ++rep.hom_failures;
    if (!equal<S>(u, w) && equal<ValSeries>(au, aw)) ++rep.distinct_failures;
    Mat<S> p = u;
    for (int e = 1; e <= 6; ++e) {
      if (is_identity<S>(p)) {
        ++rep.torsion_failures;
        break;
      }
      p = p * u;
    }
  }
  return rep;
}

}  // namespace

AdjointReport adjoint_embedding_check(const GroupSpec& spec, int samples, std::uint64_t seed) {
  if (spec.family == Family::SU) return adjoint_check_impl<GaussSeries>(spec, samples, seed);
  return adjoint_check_impl<ValSeries>(spec, samples, seed);
}

#define INFINILIE_INSTANTIATE(S)                                                                         \
  template Vec<ValSeries> LieCoordinates::operator()<S>(const Mat<S>&) const;                            \
  template Mat<S> LieCoordinates::element<S>(const Vec<ValSeries>&) const;                               \
  template SeriesMatrix LieCoordinates::adjoint_matrix<S>(const Mat<S>&) const;                          \
  template struct ArcJ<S>;                                                                               \
  template ArcJ<S> make_arc<S>(const GroupSpec&, const Axis&);                                           \
  template Mat<S> random_G00<S>(const GroupSpec&, Sampler&, Exponent, std::int64_t);                     \
  template ChartData<S> find_conjugators<S>(const GroupSpec&, const ArcJ<S>&, std::uint64_t, std::int64_t); \
  template Mat<S> chart_phi<S>(const ChartData<S>&, const std::vector<ValSeries>&);                      \
  template ChartSolution chart_solve<S>(const ChartData<S>&, const Mat<S>&);                             \
  template ChartSolution star<S>(const ChartData<S>&, const std::vector<ValSeries>&, const std::vector<ValSeries>&);

INFINILIE_INSTANTIATE(ValSeries)
INFINILIE_INSTANTIATE(GaussSeries)

#undef INFINILIE_INSTANTIATE

}  // namespace infinilie

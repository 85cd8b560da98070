#include "infinilie/lie.hpp"

#include <algorithm>

namespace infinilie {

namespace {

using Index = Eigen::Index;

ExactMatrix unit(int n, int i, int j) {
  ExactMatrix m = ExactMatrix::Zero(n, n);
  m(i, j) = GaussScalar(1);
  return m;
}

const GaussScalar kI = GaussScalar::i();

// Real coordinates of an element of 𝔤: real parts of all entries, then
// imaginary parts. Elements of 𝔤₀ span over ℝ exactly what these columns span.
Mat<QuadExt> realify(const MatrixList& xs) {
  if (xs.empty()) return Mat<QuadExt>(0, 0);
  const Index n2 = xs.front().size();
  Mat<QuadExt> out(2 * n2, static_cast<Index>(xs.size()));
  for (std::size_t c = 0; c < xs.size(); ++c) {
    const auto col = static_cast<Index>(c);
    for (Index k = 0; k < n2; ++k) {
      out(k, col) = xs[c].data()[k].re();
      out(n2 + k, col) = xs[c].data()[k].im();
    }
  }
  return out;
}

MatrixList concat(MatrixList a, const MatrixList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ExactMatrix combine(const MatrixList& basis, const Vec<QuadExt>& x) {
  ExactMatrix out = ExactMatrix::Zero(basis.front().rows(), basis.front().cols());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const QuadExt& c = x(static_cast<Index>(k));
    if (!is_zero(c)) out += GaussScalar(c) * basis[k];
  }
  return out;
}

// Eigenvalue of ad(h) on e, read off one nonzero entry; nullopt if e is not
// an eigenvector.
std::optional<GaussScalar> ad_eigenvalue(const ExactMatrix& h, const ExactMatrix& e) {
  const ExactMatrix he = bracket(h, e);
  for (Index k = 0; k < e.size(); ++k) {
    if (is_zero(e.data()[k])) continue;
    const GaussScalar lambda = he.data()[k] / e.data()[k];
    if (equal<GaussScalar>(he, lambda * e)) return lambda;
    return std::nullopt;
  }
  return std::nullopt;
}

std::string root_label(const std::vector<int>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (coeffs[k] < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    out += "e" + std::to_string(k + 1);
  }
  return out;
}

std::vector<int> negated(std::vector<int> v) {
  for (int& x : v) x = -x;
  return v;
}

// c > 0 with c² = x, inside ℚ or a single quadratic extension.
QuadExt positive_sqrt(const QuadExt& x) {
  if (auto r = sqrt_in(x, 1)) return *r;
  if (x.is_rational()) {
    const auto [free, root] = squarefree_decompose(x.a().get_num() * x.a().get_den());
    if (free.fits_slong_p()) {
      if (auto r = sqrt_in(x, free.get_si())) return *r;
    }
  } else if (auto r = sqrt_in(x, x.radicand())) {
    return *r;
  }
  throw ExtensionRequired("non-quadratic square root of " + x.str());
}

}  // namespace

std::string LieAlgebra::name() const {
  return std::string(family == LieFamily::SO ? "so(" : "su(") + std::to_string(n) + ")";
}

ExactMatrix bracket(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

ExactMatrix sigma(const ExactMatrix& x) { return -adjoint<GaussScalar>(x); }

bool in_real_form(const ExactMatrix& x) { return equal<GaussScalar>(sigma(x), x); }

LieAlgebra build_algebra(LieFamily family, int n) {
  LieAlgebra g;
  g.family = family;
  g.n = n;
  if (family == LieFamily::SO) {
    if (n < 3 || n > 12) throw DomainError("unsupported algebra size: so(" + std::to_string(n) + ")");
    if (n == 3) {
      g.basis = {unit(3, 2, 1) - unit(3, 1, 2), unit(3, 0, 2) - unit(3, 2, 0), unit(3, 1, 0) - unit(3, 0, 1)};
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.basis.push_back(unit(n, j, i) - unit(n, i, j));
    }
    g.simple = n != 4;
  } else {
    if (n < 2 || n > 12) throw DomainError("unsupported algebra size: su(" + std::to_string(n) + ")");
    const GaussScalar half(Rational(1, 2));
    const GaussScalar ihalf = kI * half;
    for (int j = 0; j + 1 < n; ++j) g.basis.push_back(ihalf * (unit(n, j, j) - unit(n, j + 1, j + 1)));
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        g.basis.push_back(half * (unit(n, j, k) - unit(n, k, j)));
        g.basis.push_back(ihalf * (unit(n, j, k) + unit(n, k, j)));
      }
    }
    g.simple = true;
  }
  return g;
}

LieAlgebra build_algebra(const std::string& name) {
  if (name.size() < 3) throw DomainError("unknown algebra: " + name);
  const std::string fam = name.substr(0, 2);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(name.substr(2), &used);
    if (used != name.size() - 2) throw DomainError("unknown algebra: " + name);
  } catch (const std::logic_error&) {
    throw DomainError("unknown algebra: " + name);
  }
  if (fam == "so") return build_algebra(LieFamily::SO, n);
  if (fam == "su") return build_algebra(LieFamily::SU, n);
  throw DomainError("unknown algebra: " + name);
}

MatrixList cartan_subalgebra(const LieAlgebra& g) {
  MatrixList h;
  const int n = g.n;
  if (g.family == LieFamily::SO) {
    for (int k = 0; 2 * k + 1 < n; ++k) h.push_back(unit(n, 2 * k + 1, 2 * k) - unit(n, 2 * k, 2 * k + 1));
  } else {
    const GaussScalar ihalf = kI * GaussScalar(Rational(1, 2));
    for (int j = 0; j + 1 < n; ++j) h.push_back(ihalf * (unit(n, j, j) - unit(n, j + 1, j + 1)));
  }
  return h;
}

RootDatum root_decomposition(const LieAlgebra& g) {
  RootDatum rd;
  rd.cartan = cartan_subalgebra(g);
  const int n = g.n;
  struct Positive {
    ExactMatrix vec;
    std::vector<int> coeffs;
  };
  std::vector<Positive> pos;
  if (g.family == LieFamily::SO) {
    const int m = n / 2;
    // f_k^± = e_{2k} ∓ i e_{2k+1} has weight ±e_k; e_{n-1} has weight 0 for odd n.
    auto f = [&](int k, int s) {
      Vec<GaussScalar> v = Vec<GaussScalar>::Zero(n);
      v(2 * k) = GaussScalar(1);
      v(2 * k + 1) = s > 0 ? -kI : kI;
      return v;
    };
    auto wedge = [&](const Vec<GaussScalar>& u, const Vec<GaussScalar>& v) -> ExactMatrix {
      return -kI * ExactMatrix(u * v.transpose() - v * u.transpose());
    };
    for (int j = 0; j < m; ++j) {
      if (n % 2 == 1) {
        Vec<GaussScalar> z = Vec<GaussScalar>::Zero(n);
        z(n - 1) = GaussScalar(1);
        std::vector<int> c(static_cast<std::size_t>(m), 0);
        c[static_cast<std::size_t>(j)] = 1;
        pos.push_back({wedge(f(j, 1), z), c});
      }
      for (int k = j + 1; k < m; ++k) {
        for (int s : {-1, 1}) {
          std::vector<int> c(static_cast<std::size_t>(m), 0);
          c[static_cast<std::size_t>(j)] = 1;
          c[static_cast<std::size_t>(k)] = s;
          pos.push_back({wedge(f(j, 1), f(k, s)), c});
        }
      }
    }
  } else {
    for (int j = 0; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        c[static_cast<std::size_t>(j)] = 1;
        c[static_cast<std::size_t>(k)] = -1;
        pos.push_back({unit(n, j, k), c});
      }
    }
  }
  for (const Positive& p : pos) {
    for (int s : {1, -1}) {
      Root r;
      r.vec = s > 0 ? p.vec : sigma(p.vec);
      r.label = root_label(s > 0 ? p.coeffs : negated(p.coeffs));
      for (const ExactMatrix& h : rd.cartan) {
        const auto lambda = ad_eigenvalue(h, r.vec);
        if (!lambda) throw DomainError("root vector " + r.label + " is not a common eigenvector");
        r.values.push_back(*lambda);
      }
      rd.roots.push_back(std::move(r));
    }
  }
  return rd;
}

RootDatumChecks check_root_datum(const LieAlgebra& g, const RootDatum& rd) {
  RootDatumChecks c;
  c.eigen = true;
  c.imaginary = true;
  c.paired = true;
  for (std::size_t r = 0; r < rd.roots.size(); ++r) {
    const Root& root = rd.roots[r];
    for (std::size_t k = 0; k < rd.cartan.size(); ++k) {
      if (!equal<GaussScalar>(bracket(rd.cartan[k], root.vec), root.values[k] * root.vec)) c.eigen = false;
      if (!is_zero(root.values[k].re())) c.imaginary = false;
    }
    if (r % 2 == 1) {
      const Root& partner = rd.roots[r - 1];
      if (!equal<GaussScalar>(root.vec, sigma(partner.vec))) c.paired = false;
      for (std::size_t k = 0; k < rd.cartan.size(); ++k)
        if (!(root.values[k] == -partner.values[k])) c.paired = false;
    }
  }
  const auto h = static_cast<Index>(rd.cartan.size());
  Mat<QuadExt> vals(static_cast<Index>(rd.roots.size()), h);
  for (std::size_t r = 0; r < rd.roots.size(); ++r)
    for (Index k = 0; k < h; ++k) vals(static_cast<Index>(r), k) = rd.roots[r].values[static_cast<std::size_t>(k)].im();
  c.spans = rank(vals) == h;
  // Proportional value vectors only for α and −α.
  c.reduced = true;
  for (std::size_t a = 0; a < rd.roots.size(); ++a) {
    for (std::size_t b = a + 1; b < rd.roots.size(); ++b) {
      Mat<QuadExt> two(2, h);
      two.row(0) = vals.row(static_cast<Index>(a));
      two.row(1) = vals.row(static_cast<Index>(b));
      const bool proportional = rank(two) < 2;
      const bool partners = (b == a + 1 && a % 2 == 0);
      if (proportional && !partners) c.reduced = false;
      if (partners && !proportional) c.reduced = false;
    }
  }
  c.dimension = g.dim() == static_cast<int>(rd.cartan.size() + rd.roots.size());
  return c;
}

RootUV uv_from_root(const RootDatum& rd, std::size_t root) {
  const ExactMatrix& e = rd.roots.at(root).vec;
  const ExactMatrix se = sigma(e);
  RootUV uv;
  uv.U = kI * e - kI * se;
  uv.V = e + se;
  uv.W = bracket(uv.U, uv.V);
  return uv;
}

bool cartan_action_holds(const RootDatum& rd, std::size_t root, const RootUV& uv) {
  const Root& r = rd.roots.at(root);
  for (std::size_t k = 0; k < rd.cartan.size(); ++k) {
    const GaussScalar ia = kI * r.values[k];
    if (!equal<GaussScalar>(bracket(rd.cartan[k], uv.U), ia * uv.V)) return false;
    if (!equal<GaussScalar>(bracket(rd.cartan[k], uv.V), -ia * uv.U)) return false;
  }
  return true;
}

int negativity_check(const RootDatum& rd, std::size_t root) {
  const Root& r = rd.roots.at(root);
  const ExactMatrix x = bracket(r.vec, sigma(r.vec));
  const auto coords = coordinates(rd.cartan, x);
  if (!coords) throw DomainError("[E, σ(E)] is not in the Cartan subalgebra");
  GaussScalar value(0);
  for (std::size_t k = 0; k < rd.cartan.size(); ++k) value += (*coords)(static_cast<Index>(k)) * r.values[k];
  return sign(real_value(value));
}

bool triple_relations_hold(const SO3Triple& t) {
  return equal<GaussScalar>(bracket(t.U, t.V), t.H) && equal<GaussScalar>(bracket(t.H, t.U), t.V) &&
         equal<GaussScalar>(bracket(t.V, t.H), t.U);
}

SO3Triple normalize_triple(const RootUV& uv) {
  const auto lam = coordinates({uv.V}, bracket(uv.W, uv.U));
  if (!lam) throw DomainError("inconsistent triple: [W, U] is not a multiple of V");
  const GaussScalar l = (*lam)(0);
  if (!l.is_real() || sign(l.re()) <= 0) throw DomainError("inconsistent triple: lambda <= 0");
  const QuadExt c = positive_sqrt(inv(l.re()));
  const GaussScalar cg(c);
  return {GaussScalar(c * c) * uv.W, cg * uv.U, cg * uv.V};
}

SO3Triple standard_so3_triple() {
  const LieAlgebra g = build_algebra(LieFamily::SO, 3);
  return {g.basis[0], g.basis[1], g.basis[2]};
}

SO3Triple standard_su2_triple() {
  const LieAlgebra g = build_algebra(LieFamily::SU, 2);
  return {g.basis[0], g.basis[1], g.basis[2]};
}

std::optional<Vec<GaussScalar>> coordinates(const MatrixList& basis, const ExactMatrix& x) {
  const auto k = static_cast<Index>(basis.size());
  if (k == 0) {
    if (is_zero<GaussScalar>(x)) return Vec<GaussScalar>(0);
    return std::nullopt;
  }
  const Index n2 = x.size();
  Mat<GaussScalar> a(n2, k + 1);
  for (Index c = 0; c < k; ++c)
    for (Index i = 0; i < n2; ++i) a(i, c) = basis[static_cast<std::size_t>(c)].data()[i];
  for (Index i = 0; i < n2; ++i) a(i, k) = x.data()[i];
  const RowEchelon<GaussScalar> e = row_reduce(a);
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;
  if (static_cast<Index>(e.pivots.size()) != k) throw DomainError("coordinates: dependent basis");
  Vec<GaussScalar> out(k);
  for (Index r = 0; r < k; ++r) out(r) = e.reduced(r, k);
  return out;
}

int span_dim(const MatrixList& xs) { return xs.empty() ? 0 : static_cast<int>(rank(realify(xs))); }

bool span_contains(const MatrixList& big, const MatrixList& small) {
  if (small.empty()) return true;
  return span_dim(concat(big, small)) == span_dim(big);
}

bool span_equal(const MatrixList& a, const MatrixList& b) { return span_contains(a, b) && span_contains(b, a); }

MatrixList span_basis(const MatrixList& xs) {
  if (xs.empty()) return {};
  // Pivot columns of the realified matrix pick an independent subset.
  const RowEchelon<QuadExt> e = row_reduce(realify(xs));
  MatrixList out;
  for (Index p : e.pivots) out.push_back(xs[static_cast<std::size_t>(p)]);
  return out;
}

MatrixList brackets(const MatrixList& a, const MatrixList& b) {
  MatrixList out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(bracket(x, y));
  return out;
}

bool is_subalgebra(const MatrixList& xs) { return span_contains(xs, brackets(xs, xs)); }

MatrixList centralizer_subalg(const LieAlgebra& g, const MatrixList& a) {
  if (a.empty()) return g.basis;
  const Index n2 = static_cast<Index>(g.n) * g.n;
  const auto dim = static_cast<Index>(g.basis.size());
  Mat<QuadExt> m(2 * n2 * static_cast<Index>(a.size()), dim);
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Mat<QuadExt> block = realify(brackets(g.basis, {a[j]}));
    m.middleRows(2 * n2 * static_cast<Index>(j), 2 * n2) = block;
  }
  const Mat<QuadExt> ker = kernel(m);
  MatrixList out;
  for (Index c = 0; c < ker.cols(); ++c) out.push_back(combine(g.basis, ker.col(c)));
  return out;
}

bool LemmaReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.pass; });
}

LemmaReport verify_lemma_so3(const LieAlgebra& g, const RootDatum& rd, std::size_t root) {
  if (!g.simple) throw DomainError("non-simple algebra: " + g.name());
  LemmaReport rep;
  rep.algebra = g.name();
  rep.root = rd.roots.at(root).label;
  const RootUV uv = uv_from_root(rd, root);
  const MatrixList s_alpha{uv.U, uv.V, uv.W};
  const MatrixList s_prime = concat(rd.cartan, {uv.U, uv.V});
  auto add = [&](std::string name, bool pass, int lhs, int rhs) {
    rep.checks.push_back({std::move(name), pass, lhs, rhs});
  };

  add("real-form", in_real_form(uv.U) && in_real_form(uv.V), 2, span_dim({uv.U, uv.V}));
  add("cartan-action", cartan_action_holds(rd, root, uv), static_cast<int>(rd.cartan.size()), static_cast<int>(rd.cartan.size()));
  add("negativity", negativity_check(rd, root) == -1, 1, 1);
  add("s-subalgebra", is_subalgebra(s_alpha) && span_contains(rd.cartan, {uv.W}), span_dim(s_alpha), 3);
  add("s-prime-closed", is_subalgebra(s_prime), span_dim(s_prime), span_dim(brackets(s_prime, s_prime)));
  const MatrixList derived = brackets(s_prime, s_prime);
  add("derived-equals-s", span_equal(derived, s_alpha), span_dim(derived), span_dim(s_alpha));

  const MatrixList c1 = centralizer_subalg(g, s_prime);
  Mat<QuadExt> row(1, static_cast<Index>(rd.cartan.size()));
  for (std::size_t k = 0; k < rd.cartan.size(); ++k) row(0, static_cast<Index>(k)) = rd.roots[root].values[k].im();
  const Mat<QuadExt> kv = kernel(row);
  MatrixList ker_alpha;
  for (Index c = 0; c < kv.cols(); ++c) ker_alpha.push_back(combine(rd.cartan, kv.col(c)));
  add("centralizer-is-ker-alpha", span_equal(c1, ker_alpha), span_dim(c1), span_dim(ker_alpha));

  const MatrixList c2 = centralizer_subalg(g, c1);
  add("double-centralizer", span_equal(c2, s_prime), span_dim(c2), span_dim(s_prime));

  bool triple_ok = false;
  try {
    triple_ok = triple_relations_hold(normalize_triple(uv));
  } catch (const Error&) {
    triple_ok = false;
  }
  add("so3-triple", triple_ok, 3, 3);
  return rep;
}

}  // namespace infinilie

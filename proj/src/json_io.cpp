#include "infinilie/json_io.hpp"

#include "infinilie/parse.hpp"

namespace infinilie {

namespace {

using Index = Eigen::Index;

template <class C>
C coeff_from_string(const std::string& text) {
  const GaussScalar g = parse_scalar(text);
  if constexpr (std::is_same_v<C, GaussScalar>) {
    return g;
  } else {
    if (!is_zero(g.im())) throw DomainError("imaginary coefficient in a real series: " + text);
    return g.re();
  }
}

template <class C>
Series<C> series_from(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.contains("trunc")) throw DomainError("series JSON needs terms and trunc");
  std::vector<typename Series<C>::Term> terms;
  for (const Json& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2) throw DomainError("series term must be [exp, coeff]");
    terms.push_back({Exponent::parse(t[0].get<std::string>()), coeff_from_string<C>(t[1].get<std::string>())});
  }
  return Series<C>(std::move(terms), Exponent::parse(j.at("trunc").get<std::string>()));
}

template <class S>
Mat<S> matrix_from(const Json& j) {
  const auto rows = j.at("rows").get<Index>(), cols = j.at("cols").get<Index>();
  const Json& e = j.at("entries");
  if (rows < 0 || cols < 0 || static_cast<Index>(e.size()) != rows * cols)
    throw DomainError("matrix JSON: entry count does not match rows*cols");
  Mat<S> m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      const std::string text = e[static_cast<std::size_t>(r * cols + c)].get<std::string>();
      if constexpr (std::is_same_v<S, GaussSeries>) {
        m(r, c) = parse_gauss_expr(text);
      } else {
        m(r, c) = parse_expr(text);
      }
    }
  }
  return m;
}

}  // namespace

template <class C>
Json series_to_json(const Series<C>& x) {
  Json terms = Json::array();
  for (const auto& t : x.terms()) terms.push_back(Json::array({t.exp.str(), t.coeff.str()}));
  return {{"terms", terms}, {"trunc", x.trunc().str()}};
}

ValSeries series_from_json(const Json& j) { return series_from<QuadExt>(j); }
GaussSeries gauss_series_from_json(const Json& j) { return series_from<GaussScalar>(j); }

template <class S>
Json matrix_to_json(const Mat<S>& m) {
  Json entries = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) entries.push_back(to_expr(m(r, c)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json matrix_to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) entries.push_back(m(r, c).str());
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

SeriesMatrix matrix_from_json(const Json& j) { return matrix_from<ValSeries>(j); }
GaussSeriesMatrix gauss_matrix_from_json(const Json& j) { return matrix_from<GaussSeries>(j); }

Json group_to_json(const GroupSpec& g) {
  switch (g.family) {
    case Family::SO:
      return {{"family", "so"}, {"n", g.n}};
    case Family::SU:
      return {{"family", "su"}, {"n", g.n}};
    case Family::Product:
      return {{"family", "product"}, {"left", group_to_json(g.factors.at(0))}, {"right", group_to_json(g.factors.at(1))}};
  }
  return {};
}

GroupSpec group_from_json(const Json& j) {
  const std::string fam = j.at("family").get<std::string>();
  if (fam == "so") return GroupSpec::so(j.at("n").get<int>());
  if (fam == "su") return GroupSpec::su(j.at("n").get<int>());
  if (fam == "product") return GroupSpec::product(group_from_json(j.at("left")), group_from_json(j.at("right")));
  throw DomainError("unknown group family: " + fam);
}

Json quaternion_to_json(const Quaternion& q) {
  return {{"w", to_expr(q.w)}, {"x", to_expr(q.x)}, {"y", to_expr(q.y)}, {"z", to_expr(q.z)}};
}

Quaternion quaternion_from_json(const Json& j) {
  auto get = [&](const char* k) { return parse_expr(j.at(k).get<std::string>()); };
  return {get("w"), get("x"), get("y"), get("z")};
}

Json axis_to_json(const Axis& a) { return Json::array({to_expr(a[0]), to_expr(a[1]), to_expr(a[2])}); }

Json lemma_certificate(const LemmaReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"dims", {c.dim_lhs, c.dim_rhs}}});
  return {{"algebra", r.algebra}, {"root", r.root}, {"checks", checks}};
}

template <class S>
Json chart_certificate(const ChartData<S>& cd) {
  Json conj = Json::array();
  for (const auto& h : cd.conjugators) conj.push_back(matrix_to_json<S>(h));
  return {{"group", group_to_json(cd.spec)},
          {"axis", axis_to_json(cd.arc.axis)},
          {"conjugators", conj},
          {"det_val", cd.det_val.str()},
          {"trunc", cd.trunc.str()},
          {"seed", cd.seed}};
}

template Json series_to_json(const ValSeries&);
template Json series_to_json(const GaussSeries&);
template Json matrix_to_json(const SeriesMatrix&);
template Json matrix_to_json(const GaussSeriesMatrix&);
template Json chart_certificate(const ChartData<ValSeries>&);
template Json chart_certificate(const ChartData<GaussSeries>&);

}  // namespace infinilie

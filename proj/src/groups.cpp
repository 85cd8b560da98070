#include "infinilie/groups.hpp"

#include <algorithm>
#include <cctype>

namespace infinilie {

int GroupSpec::dim() const {
  switch (family) {
    case Family::SO: return n * (n - 1) / 2;
    case Family::SU: return n * n - 1;
    case Family::Product: return factors.at(0).dim() + factors.at(1).dim();
  }
  return 0;
}

int GroupSpec::matrix_size() const {
  if (family == Family::Product) return factors.at(0).matrix_size() + factors.at(1).matrix_size();
  return n;
}

bool GroupSpec::is_complex() const {
  if (family == Family::Product) return factors.at(0).is_complex() || factors.at(1).is_complex();
  return family == Family::SU;
}

std::string GroupSpec::name() const {
  switch (family) {
    case Family::SO: return "SO(" + std::to_string(n) + ")";
    case Family::SU: return "SU(" + std::to_string(n) + ")";
    case Family::Product: return factors.at(0).name() + "x" + factors.at(1).name();
  }
  return "?";
}

GroupSpec GroupSpec::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')')
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  const auto x = s.find('x');
  if (x != std::string::npos) return product(parse(s.substr(0, x)), parse(s.substr(x + 1)));
  if (s.size() < 3 || (s.rfind("so", 0) != 0 && s.rfind("su", 0) != 0))
    throw Error("unknown group: " + text);
  int n = 0;
  try {
    n = std::stoi(s.substr(2));
  } catch (const std::logic_error&) {
    throw Error("unknown group: " + text);
  }
  if (s[1] == 'o') {
    if (n < 2) throw Error("unsupported group: " + text);
    return so(n);
  }
  if (n < 2) throw Error("unsupported group: " + text);
  return su(n);
}

template <class S>
Mat<S> mat_inv(const Mat<S>& m) {
  const S det = determinant(m);
  if (det.is_zero())
    throw SingularMatrix("singular matrix: det = 0 mod e^" + det.trunc().str());
  const Exponent v = det.order();
  if (!(v * Exponent(2) < det.trunc())) {
    throw SingularMatrix("singular matrix: val(det) = " + v.str() +
                         " is not below trunc/2 = " + (det.trunc() / Exponent(2)).str() +
                         " (shortfall " + (v - det.trunc() / Exponent(2)).str() + ")");
  }
  return inverse(m);
}

template <class S>
bool in_group(const GroupSpec& spec, const Mat<S>& m) {
  const int n = spec.matrix_size();
  if (m.rows() != n || m.cols() != n) {
    throw DomainError("size mismatch: " + spec.name() + " needs " + std::to_string(n) + "x" +
                      std::to_string(n) + " matrices");
  }
  switch (spec.family) {
    case Family::SO:
      for (Eigen::Index i = 0; i < m.size(); ++i)
        if (!is_real(m.data()[i])) return false;
      [[fallthrough]];
    case Family::SU:
      return is_identity<S>(adjoint<S>(m) * m) && determinant<S>(m) == S(1);
    case Family::Product: {
      const int k = spec.factors.at(0).matrix_size();
      if (!is_zero<S>(m.topRightCorner(k, n - k)) || !is_zero<S>(m.bottomLeftCorner(n - k, k)))
        return false;
      return in_group<S>(spec.factors[0], m.topLeftCorner(k, k)) &&
             in_group<S>(spec.factors[1], m.bottomRightCorner(n - k, n - k));
    }
  }
  return false;
}

template <class S>
Mat<S> st_matrix(const Mat<S>& m) {
  return m.unaryExpr([](const S& s) {
    if (classify(s) == Magnitude::OUTSIDE_O) throw DomainError("unbounded entry: " + to_expr(s));
    return S(standard_part(s));
  });
}

template <class S>
bool in_G00(const GroupSpec& spec, const Mat<S>& m) {
  if (!in_group(spec, m)) return false;
  const Mat<S> d = m - identity<S>(m.rows());
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (classify(d.data()[i]) != Magnitude::IN_m) return false;
  return true;
}

template <class S>
Mat<S> cayley(const Mat<S>& x) {
  if (x.rows() != x.cols()) throw DomainError("cayley: non-square argument");
  if (!is_zero<S>(x + adjoint<S>(x))) throw DomainError("cayley: argument is not skew");
  const Mat<S> id = identity<S>(x.rows());
  try {
    return (id + x) * mat_inv<S>(id - x);
  } catch (const SingularMatrix& e) {
    throw DomainError(std::string("chart domain: I - X is singular (") + e.what() + ")");
  }
}

template <class S>
Mat<S> cayley_inv(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw DomainError("cayley_inv: non-square argument");
  const Mat<S> id = identity<S>(m.rows());
  try {
    return (m - id) * mat_inv<S>(m + id);
  } catch (const SingularMatrix& e) {
    throw DomainError(std::string("chart domain: I + M is singular (") + e.what() + ")");
  }
}

template <class S>
std::pair<bool, bool> product_G00_check(const GroupSpec& a, const GroupSpec& b,
                                        const Mat<S>& m) {
  const int ka = a.matrix_size();
  const int kb = b.matrix_size();
  if (m.rows() != ka + kb || m.cols() != ka + kb)
    throw DomainError("shape mismatch for " + a.name() + "x" + b.name());
  const bool whole = in_G00(GroupSpec::product(a, b), m);
  const bool blocks = in_G00<S>(a, m.topLeftCorner(ka, ka)) &&
                      in_G00<S>(b, m.bottomRightCorner(kb, kb));
  return {whole, blocks};
}

#define INFINILIE_INSTANTIATE(S)                                                   \
  template Mat<S> mat_inv(const Mat<S>&);                                          \
  template bool in_group(const GroupSpec&, const Mat<S>&);                         \
  template Mat<S> st_matrix(const Mat<S>&);                                        \
  template bool in_G00(const GroupSpec&, const Mat<S>&);                           \
  template Mat<S> cayley(const Mat<S>&);                                           \
  template Mat<S> cayley_inv(const Mat<S>&);                                       \
  template std::pair<bool, bool> product_G00_check(const GroupSpec&, const GroupSpec&, \
                                                   const Mat<S>&);

INFINILIE_INSTANTIATE(ValSeries)
INFINILIE_INSTANTIATE(GaussSeries)

#undef INFINILIE_INSTANTIATE

}  // namespace infinilie

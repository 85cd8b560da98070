#include "infinilie/series.hpp"

#include <algorithm>
#include <numeric>

namespace infinilie {

Context& current_context() {
  thread_local Context ctx;
  return ctx;
}

Exponent Exponent::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Exponent(std::stoll(text));
    return Exponent(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw Error("not an exponent: " + text);
  }
}

std::string to_string(SeriesOrder o) {
  switch (o) {
    case SeriesOrder::LT: return "LT";
    case SeriesOrder::EQ_mod_trunc: return "EQ_mod_trunc";
    case SeriesOrder::GT: return "GT";
  }
  return "?";
}

std::string to_string(Magnitude m) {
  switch (m) {
    case Magnitude::IN_m: return "IN_m";
    case Magnitude::IN_O_UNIT: return "IN_O_UNIT";
    case Magnitude::OUTSIDE_O: return "OUTSIDE_O";
  }
  return "?";
}

namespace {

std::int64_t floor_div(__int128 a, std::int64_t b) {
  __int128 q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return static_cast<std::int64_t>(q);
}

Rational to_rational(Exponent e) {
  return make_rational(Integer(static_cast<long>(e.num())), Integer(static_cast<long>(e.den())));
}

template <class C>
C scalar_pow_int(C base, long n) {
  if (n < 0) return scalar_pow_int(inv(base), -n);
  C result(1);
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

std::optional<Rational> rational_root(const Rational& q, long k) {
  if (sgn(q) < 0 && k % 2 == 0) return std::nullopt;
  Integer n = abs(q.get_num()), d = q.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k) == 0) return std::nullopt;
  if (sgn(q) < 0) rn = -rn;
  return make_rational(rn, rd);
}

// c^a for a rational exponent a; nullopt when the root leaves the tower.
template <class C>
std::optional<C> scalar_power(const C& c, Exponent a) {
  if (a.is_integer()) return scalar_pow_int(c, a.num());
  std::optional<C> root;
  if (a.den() == 2) {
    root = sqrt_in(c, current_context().radicand);
  } else {
    const QuadExt re = real_value(c);
    if (!re.is_rational()) return std::nullopt;
    if (auto r = rational_root(re.a(), a.den())) root = C(QuadExt(*r));
  }
  if (!root) return std::nullopt;
  return scalar_pow_int(*root, a.num());
}

}  // namespace

// ------------------------------------------------------------- Series<C>

template <class C>
Series<C>::Series(const C& c) : trunc_(current_context().trunc) {
  if (!infinilie::is_zero(c) && Exponent(0) < trunc_) terms_.push_back({Exponent(0), c});
}

template <class C>
Series<C>::Series(std::vector<Term> terms, Exponent trunc) : trunc_(trunc) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exp < b.exp; });
  for (auto& t : terms) {
    if (!(t.exp < trunc_)) break;
    if (!terms_.empty() && terms_.back().exp == t.exp) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return infinilie::is_zero(t.coeff); });
  check_ramification();
}

template <class C>
Series<C> Series<C>::monomial(const C& c, Exponent e, Exponent trunc) {
  std::vector<Term> terms;
  terms.push_back({e, c});
  return Series(std::move(terms), trunc);
}

template <class C>
const C& Series<C>::leading_coeff() const {
  if (terms_.empty()) throw DomainError("leading coefficient of a zero series");
  return terms_.front().coeff;
}

template <class C>
C Series<C>::coeff(Exponent e) const {
  for (const auto& t : terms_)
    if (t.exp == e) return t.coeff;
  return C(0);
}

template <class C>
Series<C> Series<C>::truncated(Exponent t) const {
  Series r = *this;
  r.trunc_ = min(trunc_, t);
  while (!r.terms_.empty() && !(r.terms_.back().exp < r.trunc_)) r.terms_.pop_back();
  return r;
}

template <class C>
Series<C> Series<C>::shifted(Exponent k) const {
  Series r = *this;
  r.trunc_ += k;
  for (auto& t : r.terms_) t.exp += k;
  r.check_ramification();
  return r;
}

template <class C>
Series<C> Series<C>::scaled(const C& c) const {
  if (infinilie::is_zero(c)) return zero(trunc_);
  Series r = *this;
  for (auto& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

template <class C>
void Series<C>::check_ramification() const {
  const std::int64_t bound = current_context().ramification;
  for (const auto& t : terms_) {
    if (t.exp.den() > bound) {
      throw PrecisionError("exponent " + t.exp.str() + " exceeds ramification bound " +
                           std::to_string(bound));
    }
  }
}

template <class C>
Series<C> Series<C>::add(const Series& x, const Series& y, bool subtract) {
  Series r;
  r.trunc_ = min(x.trunc_, y.trunc_);
  r.terms_.reserve(x.terms_.size() + y.terms_.size());
  auto i = x.terms_.begin();
  auto j = y.terms_.begin();
  auto push = [&](Exponent e, C c) {
    if (e < r.trunc_ && !infinilie::is_zero(c)) r.terms_.push_back({e, std::move(c)});
  };
  while (i != x.terms_.end() || j != y.terms_.end()) {
    if (j == y.terms_.end() || (i != x.terms_.end() && i->exp < j->exp)) {
      push(i->exp, i->coeff);
      ++i;
    } else if (i == x.terms_.end() || j->exp < i->exp) {
      push(j->exp, subtract ? -j->coeff : j->coeff);
      ++j;
    } else {
      push(i->exp, subtract ? i->coeff - j->coeff : i->coeff + j->coeff);
      ++i;
      ++j;
    }
  }
  return r;
}

template <class C>
Series<C> Series<C>::mul(const Series& x, const Series& y) {
  Series r;
  r.trunc_ = min(x.order() + y.trunc_, y.order() + x.trunc_);
  if (x.terms_.empty() || y.terms_.empty()) return r;

  // Accumulate densely on the common exponent grid (1/D)ℤ.
  std::int64_t D = 1;
  for (const auto& t : x.terms_) D = std::lcm(D, t.exp.den());
  for (const auto& t : y.terms_) D = std::lcm(D, t.exp.den());
  auto index = [D](Exponent e) { return e.num() * (D / e.den()); };
  const std::int64_t lo = index(x.terms_.front().exp) + index(y.terms_.front().exp);
  const std::int64_t hi =
      floor_div(static_cast<__int128>(r.trunc_.num()) * D - 1, r.trunc_.den());
  if (hi < lo) return r;

  std::vector<C> acc(static_cast<std::size_t>(hi - lo + 1));
  std::vector<std::int64_t> yi;
  yi.reserve(y.terms_.size());
  for (const auto& t : y.terms_) yi.push_back(index(t.exp));
  for (const auto& tx : x.terms_) {
    const std::int64_t xi = index(tx.exp);
    for (std::size_t j = 0; j < yi.size(); ++j) {
      const std::int64_t k = xi + yi[j];
      if (k > hi) break;
      acc[static_cast<std::size_t>(k - lo)].add_mul(tx.coeff, y.terms_[j].coeff);
    }
  }
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (!infinilie::is_zero(acc[k]))
      r.terms_.push_back({Exponent(lo + static_cast<std::int64_t>(k), D), std::move(acc[k])});
  }
  r.check_ramification();
  return r;
}

// --------------------------------------------------------- free functions

template <class C>
Series<C> inv(const Series<C>& x) {
  if (x.is_zero())
    throw DivisionByZero("division by a series that is 0 mod e^" + x.trunc().str());
  const Exponent v = x.terms().front().exp;
  const C c_inv = inv(x.leading_coeff());
  const Exponent rel = x.trunc() - v;
  // unit = x / (c·ε^v) = 1 + Σ u_j ε^{j/D}; y = 1/unit by y_k = −Σ_{j≥1} u_j y_{k−j}.
  const Series<C> unit = x.shifted(-v).scaled(c_inv);
  std::int64_t D = rel.den();
  for (const auto& t : unit.terms()) D = std::lcm(D, t.exp.den());
  const std::int64_t N = floor_div(static_cast<__int128>(rel.num()) * D - 1, rel.den()) + 1;
  std::vector<C> u(static_cast<std::size_t>(std::max<std::int64_t>(N, 1)));
  std::vector<std::int64_t> nz;
  for (const auto& t : unit.terms()) {
    const std::int64_t k = t.exp.num() * (D / t.exp.den());
    if (k >= 1 && k < N) {
      u[static_cast<std::size_t>(k)] = t.coeff;
      nz.push_back(k);
    }
  }
  std::vector<C> yc(u.size());
  std::vector<typename Series<C>::Term> terms;
  if (N > 0) {
    yc[0] = C(1);
    terms.push_back({Exponent(0), C(1)});
  }
  for (std::int64_t k = 1; k < N; ++k) {
    C acc;
    for (std::int64_t j : nz) {
      if (j > k) break;
      acc.add_mul(u[static_cast<std::size_t>(j)], yc[static_cast<std::size_t>(k - j)]);
    }
    yc[static_cast<std::size_t>(k)] = -acc;
    if (!infinilie::is_zero(yc[static_cast<std::size_t>(k)]))
      terms.push_back({Exponent(k, D), yc[static_cast<std::size_t>(k)]});
  }
  const Series<C> y(std::move(terms), rel);
  return y.scaled(c_inv).shifted(-v);
}

template <class C>
Series<C> pow(const Series<C>& x, Exponent a) {
  if (a == Exponent(0)) return Series<C>::monomial(C(1), Exponent(0));
  if (a == Exponent(-1)) return inv(x);
  if (x.is_zero()) {
    if (a < Exponent(0)) throw DivisionByZero();
    return Series<C>::zero(x.trunc() * a);
  }
  const Exponent v = x.terms().front().exp;
  const C& c = x.leading_coeff();
  if (!a.is_integer() && sign(c) < 0)
    throw DomainError("non-integer power of a negative series");
  const auto ca = scalar_power(c, a);
  if (!ca) throw ExtensionRequired(c.str());

  const Exponent rel = x.trunc() - v;
  const Series<C> one = Series<C>::monomial(C(1), Exponent(0), rel);
  const Series<C> r = x.shifted(-v).scaled(inv(c)) - one;
  // (1 + r)^a = Σ binom(a, k) rᵏ
  const Rational ar = to_rational(a);
  Series<C> sum = one;
  Series<C> power = one;
  Rational binom(1);
  for (long k = 1;; ++k) {
    binom = binom * (ar - (k - 1)) / k;
    if (sgn(binom) == 0) break;
    power = (power * r).truncated(rel);
    if (power.is_zero()) break;
    sum += power.scaled(C(QuadExt(binom)));
  }
  return sum.scaled(*ca).shifted(v * a);
}

template <class C>
Series<C> sqrt(const Series<C>& x) {
  if (!x.is_zero() && sign(x) < 0) throw DomainError("square root of a negative series");
  return pow(x, Exponent(1, 2));
}

template <class C>
Series<C> conj(const Series<C>& x) {
  std::vector<typename Series<C>::Term> terms;
  terms.reserve(x.terms().size());
  for (const auto& t : x.terms()) terms.push_back({t.exp, conj(t.coeff)});
  return Series<C>(std::move(terms), x.trunc());
}

template <class C>
int sign(const Series<C>& x) {
  return x.is_zero() ? 0 : sign(x.leading_coeff());
}

template <class C>
SeriesOrder cmp(const Series<C>& x, const Series<C>& y) {
  const int s = sign(x - y);
  return s < 0 ? SeriesOrder::LT : (s == 0 ? SeriesOrder::EQ_mod_trunc : SeriesOrder::GT);
}

template <class C>
C standard_part(const Series<C>& x) {
  if (x.is_zero()) {
    if (!(Exponent(0) < x.trunc()))
      throw PrecisionError("standard part undetermined below e^" + x.trunc().str());
    return C(0);
  }
  if (x.terms().front().exp < Exponent(0)) throw DomainError("outside O: " + to_expr(x));
  return x.coeff(Exponent(0));
}

template <class C>
Magnitude classify(const Series<C>& x) {
  if (x.is_zero()) {
    if (!(Exponent(0) < x.trunc()))
      throw PrecisionError("magnitude undetermined below e^" + x.trunc().str());
    return Magnitude::IN_m;
  }
  const Exponent v = x.terms().front().exp;
  if (Exponent(0) < v) return Magnitude::IN_m;
  return v == Exponent(0) ? Magnitude::IN_O_UNIT : Magnitude::OUTSIDE_O;
}

namespace {

struct CoeffText {
  bool negative = false;
  bool one = false;
  std::string text;
};

CoeffText coeff_text(const QuadExt& c) {
  if (!c.is_rational()) return {false, false, "(" + c.str() + ")"};
  const Rational a = abs(c.a());
  return {sgn(c.a()) < 0, a == 1, to_string(a)};
}

CoeffText coeff_text(const GaussScalar& c) {
  if (c.is_real()) return coeff_text(c.re());
  if (is_zero(c.re()) && c.im().is_rational()) {
    const Rational a = abs(c.im().a());
    return {sgn(c.im().a()) < 0, false, a == 1 ? "i" : to_string(a) + "*i"};
  }
  return {false, false, "(" + c.str() + ")"};
}

std::string power_of_e(Exponent e) {
  if (e == Exponent(1)) return "e";
  if (e.is_integer() && e.num() > 0) return "e^" + e.str();
  return "e^(" + e.str() + ")";
}

}  // namespace

template <class C>
std::string to_expr(const Series<C>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : x.terms()) {
    const CoeffText ct = coeff_text(t.coeff);
    std::string body;
    if (t.exp == Exponent(0)) {
      body = ct.text;
    } else {
      body = ct.one ? power_of_e(t.exp) : ct.text + "*" + power_of_e(t.exp);
    }
    if (first) {
      out = (ct.negative ? "-" : "") + body;
    } else {
      out += (ct.negative ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

GaussSeries to_gauss(const ValSeries& x) {
  std::vector<GaussSeries::Term> terms;
  terms.reserve(x.terms().size());
  for (const auto& t : x.terms()) terms.push_back({t.exp, GaussScalar(t.coeff)});
  return GaussSeries(std::move(terms), x.trunc());
}

ValSeries to_real(const GaussSeries& x) {
  std::vector<ValSeries::Term> terms;
  terms.reserve(x.terms().size());
  for (const auto& t : x.terms()) terms.push_back({t.exp, real_value(t.coeff)});
  return ValSeries(std::move(terms), x.trunc());
}

ValSeries real_part(const GaussSeries& x) {
  std::vector<ValSeries::Term> terms;
  for (const auto& t : x.terms()) terms.push_back({t.exp, t.coeff.re()});
  return ValSeries(std::move(terms), x.trunc());
}

ValSeries imag_part(const GaussSeries& x) {
  std::vector<ValSeries::Term> terms;
  for (const auto& t : x.terms()) terms.push_back({t.exp, t.coeff.im()});
  return ValSeries(std::move(terms), x.trunc());
}

#define INFINILIE_INSTANTIATE(C)                                     \
  template class Series<C>;                                          \
  template Series<C> inv(const Series<C>&);                          \
  template Series<C> pow(const Series<C>&, Exponent);                \
  template Series<C> sqrt(const Series<C>&);                         \
  template Series<C> conj(const Series<C>&);                         \
  template int sign(const Series<C>&);                               \
  template SeriesOrder cmp(const Series<C>&, const Series<C>&);      \
  template C standard_part(const Series<C>&);                        \
  template Magnitude classify(const Series<C>&);                     \
  template std::string to_expr(const Series<C>&);

INFINILIE_INSTANTIATE(QuadExt)
INFINILIE_INSTANTIATE(GaussScalar)

#undef INFINILIE_INSTANTIATE

}  // namespace infinilie

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "infinilie/context.hpp"
#include "infinilie/exponent.hpp"
#include "infinilie/scalar.hpp"

namespace infinilie {

/// Valuation of a truncated series: a rational, or INF for a value that is
/// zero modulo its truncation.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(); }
  Valuation(Exponent v) : v_(v) {}  // NOLINT

  bool is_infinite() const { return !v_.has_value(); }
  Exponent value() const {
    if (!v_) throw DomainError("valuation is infinite");
    return *v_;
  }
  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite())
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    return *a.v_ <=> *b.v_;
  }
  std::string str() const { return v_ ? v_->str() : "INF"; }

 private:
  Valuation() = default;
  std::optional<Exponent> v_;
};

enum class SeriesOrder { LT, EQ_mod_trunc, GT };
enum class Magnitude { IN_m, IN_O_UNIT, OUTSIDE_O };

std::string to_string(SeriesOrder o);
std::string to_string(Magnitude m);

/// Truncated Puiseux series Σ cₖ εᵉᵏ known modulo ε^trunc. Terms are sorted
/// by exponent, strictly below trunc, with nonzero coefficients; the zero
/// value is the empty term list.
template <class C>
class Series {
 public:
  using Coeff = C;
  struct Term {
    Exponent exp;
    C coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Series() : trunc_(current_context().trunc) {}
  Series(int n) : Series(C(n)) {}   // NOLINT
  Series(long n) : Series(C(n)) {}  // NOLINT
  Series(const C& c);               // NOLINT
  Series(std::vector<Term> terms, Exponent trunc);

  static Series monomial(const C& c, Exponent e) {
    return monomial(c, e, current_context().trunc);
  }
  static Series monomial(const C& c, Exponent e, Exponent trunc);
  static Series epsilon() { return monomial(C(1), Exponent(1)); }
  static Series zero(Exponent trunc) { return Series(std::vector<Term>{}, trunc); }

  const std::vector<Term>& terms() const { return terms_; }
  Exponent trunc() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  Valuation valuation() const {
    return terms_.empty() ? Valuation::infinite() : Valuation(terms_.front().exp);
  }
  /// Least exponent, or trunc for the zero value (the value is O(ε^trunc)).
  Exponent order() const { return terms_.empty() ? trunc_ : terms_.front().exp; }
  const C& leading_coeff() const;
  C coeff(Exponent e) const;

  Series truncated(Exponent t) const;
  /// Exact multiplication by ε^k.
  Series shifted(Exponent k) const;

  friend Series operator+(const Series& x, const Series& y) { return add(x, y, false); }
  friend Series operator-(const Series& x, const Series& y) { return add(x, y, true); }
  friend Series operator-(const Series& x) { return x.scaled(C(-1)); }
  friend Series operator*(const Series& x, const Series& y) { return mul(x, y); }
  friend Series operator*(const Series& x, const C& c) { return x.scaled(c); }
  friend Series operator*(const C& c, const Series& x) { return x.scaled(c); }
  friend Series operator/(const Series& x, const Series& y) { return x * inv(y); }
  Series& operator+=(const Series& y) { return *this = *this + y; }
  Series& operator-=(const Series& y) { return *this = *this - y; }
  Series& operator*=(const Series& y) { return *this = *this * y; }
  Series& operator/=(const Series& y) { return *this = *this / y; }

  Series scaled(const C& c) const;

  /// Equality modulo the smaller truncation.
  friend bool operator==(const Series& x, const Series& y) { return (x - y).is_zero(); }
  /// Same terms and same truncation.
  bool identical(const Series& y) const { return trunc_ == y.trunc_ && terms_ == y.terms_; }

 private:
  static Series add(const Series& x, const Series& y, bool subtract);
  static Series mul(const Series& x, const Series& y);
  void check_ramification() const;

  std::vector<Term> terms_;
  Exponent trunc_;
};

using ValSeries = Series<QuadExt>;
using GaussSeries = Series<GaussScalar>;

template <class C>
inline bool is_zero(const Series<C>& x) {
  return x.is_zero();
}

/// Field inverse; the result is known modulo ε^(trunc − 2·val).
template <class C>
Series<C> inv(const Series<C>& x);
/// Real x^a for rational a via the binomial series of the unit part.
template <class C>
Series<C> pow(const Series<C>& x, Exponent a);
template <class C>
Series<C> sqrt(const Series<C>& x);
template <class C>
Series<C> conj(const Series<C>& x);

/// Sign of the leading coefficient; 0 for values ≡ 0.
template <class C>
int sign(const Series<C>& x);
template <class C>
SeriesOrder cmp(const Series<C>& x, const Series<C>& y);
/// Coefficient at ε⁰; only defined on the valuation ring.
template <class C>
C standard_part(const Series<C>& x);
template <class C>
Magnitude classify(const Series<C>& x);

/// Printed in the expression grammar accepted by parse_expr.
template <class C>
std::string to_expr(const Series<C>& x);
template <class C>
std::ostream& operator<<(std::ostream& os, const Series<C>& x) {
  return os << to_expr(x);
}

GaussSeries to_gauss(const ValSeries& x);
/// Throws NotOrdered if any coefficient has an imaginary part.
ValSeries to_real(const GaussSeries& x);
inline ValSeries to_real(const ValSeries& x) { return x; }
ValSeries real_part(const GaussSeries& x);
ValSeries imag_part(const GaussSeries& x);
inline bool is_real(const GaussSeries& x) { return imag_part(x).is_zero(); }
inline bool is_real(const ValSeries&) { return true; }

extern template class Series<QuadExt>;
extern template class Series<GaussScalar>;

}  // namespace infinilie

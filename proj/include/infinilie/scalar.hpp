#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "infinilie/errors.hpp"

namespace infinilie {

/// Arbitrary-precision rational, always canonical (GMP keeps gcd = 1 and a
/// positive denominator after every operation).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);  // "p" or "p/q"
std::string to_string(const Rational& q);
inline int sign(const Rational& q) { return sgn(q); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
std::optional<Rational> rational_sqrt(const Rational& q);
/// (square-free part, square root of the square part) of a positive integer.
std::pair<Integer, Integer> squarefree_decompose(const Integer& n);

/// a + b·√d over ℚ with a square-free radicand d > 1, or a plain rational
/// (b = 0, d = 1). Canonical on construction, so == is structural.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long n) : a_(n) {}  // NOLINT
  QuadExt(int n) : a_(n) {}   // NOLINT
  QuadExt(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  QuadExt(Rational a, Rational b, std::int64_t radicand);

  /// √d as an element of ℚ(√d); square factors of d are pulled out.
  static QuadExt sqrt_of(std::int64_t d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t radicand() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x) {
    QuadExt r;
    r.a_ = -x.a_;
    r.b_ = -x.b_;
    r.d_ = x.d_;
    return r;
  }
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
  QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
  /// *this += x·y without temporaries on the rational path.
  void add_mul(const QuadExt& x, const QuadExt& y);

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string str() const;

 private:
  static std::int64_t common_radicand(const QuadExt& x, const QuadExt& y);

  Rational a_{0};
  Rational b_{0};
  std::int64_t d_ = 1;
};

inline bool is_zero(const QuadExt& x) { return sgn(x.a()) == 0 && x.is_rational(); }
/// Exact sign: compares a² with d·b² when the two parts disagree.
int sign(const QuadExt& x);
QuadExt inv(const QuadExt& x);
inline QuadExt conj(const QuadExt& x) { return x; }
/// Square root inside ℚ(√radicand); nullopt when the root needs another
/// extension.
std::optional<QuadExt> sqrt_in(const QuadExt& x, std::int64_t radicand);
std::ostream& operator<<(std::ostream& os, const QuadExt& x);

/// re + im·i with both parts in the same ℚ(√d). Complex conjugation is the
/// involution (re, im) ↦ (re, −im).
class GaussScalar {
 public:
  GaussScalar() = default;
  GaussScalar(long n) : re_(n) {}  // NOLINT
  GaussScalar(int n) : re_(n) {}   // NOLINT
  GaussScalar(Rational r) : re_(std::move(r)) {}  // NOLINT
  GaussScalar(QuadExt re) : re_(std::move(re)) {}  // NOLINT
  GaussScalar(QuadExt re, QuadExt im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussScalar i() { return {QuadExt(0), QuadExt(1)}; }

  const QuadExt& re() const { return re_; }
  const QuadExt& im() const { return im_; }
  bool is_real() const { return is_zero(im_); }

  friend GaussScalar operator+(const GaussScalar& x, const GaussScalar& y) {
    return {x.re_ + y.re_, x.im_ + y.im_};
  }
  friend GaussScalar operator-(const GaussScalar& x, const GaussScalar& y) {
    return {x.re_ - y.re_, x.im_ - y.im_};
  }
  friend GaussScalar operator-(const GaussScalar& x) { return {-x.re_, -x.im_}; }
  friend GaussScalar operator*(const GaussScalar& x, const GaussScalar& y);
  friend GaussScalar operator/(const GaussScalar& x, const GaussScalar& y);
  GaussScalar& operator+=(const GaussScalar& y) { return *this = *this + y; }
  GaussScalar& operator-=(const GaussScalar& y) { return *this = *this - y; }
  GaussScalar& operator*=(const GaussScalar& y) { return *this = *this * y; }
  void add_mul(const GaussScalar& x, const GaussScalar& y);

  friend bool operator==(const GaussScalar& x, const GaussScalar& y) = default;

  std::string str() const;

 private:
  QuadExt re_;
  QuadExt im_;
};

inline bool is_zero(const GaussScalar& x) { return is_zero(x.re()) && is_zero(x.im()); }
/// Throws NotOrdered unless the imaginary part vanishes.
int sign(const GaussScalar& x);
GaussScalar inv(const GaussScalar& x);
inline GaussScalar conj(const GaussScalar& x) { return {x.re(), -x.im()}; }
std::optional<GaussScalar> sqrt_in(const GaussScalar& x, std::int64_t radicand);
std::ostream& operator<<(std::ostream& os, const GaussScalar& x);

/// Real part of a scalar that must be real; throws NotOrdered otherwise.
QuadExt real_value(const GaussScalar& x);
inline QuadExt real_value(const QuadExt& x) { return x; }

}  // namespace infinilie

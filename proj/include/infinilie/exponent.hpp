#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "infinilie/errors.hpp"

namespace infinilie {

/// Small exact rational used for exponents of ε, truncation orders and
/// valuations. Always stored reduced with a positive denominator.
class Exponent {
 public:
  constexpr Exponent() = default;
  constexpr Exponent(std::int64_t n) : num_(n), den_(1) {}  // NOLINT
  Exponent(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw DivisionByZero("exponent with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Exponent operator+(Exponent a, Exponent b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    return {a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_};
  }
  friend Exponent operator-(Exponent a) { return {-a.num_, a.den_}; }
  friend Exponent operator-(Exponent a, Exponent b) { return a + (-b); }
  friend Exponent operator*(Exponent a, Exponent b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend Exponent operator/(Exponent a, Exponent b) {
    if (b.num_ == 0) throw DivisionByZero("exponent division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  Exponent& operator+=(Exponent b) { return *this = *this + b; }
  Exponent& operator-=(Exponent b) { return *this = *this - b; }

  friend bool operator==(Exponent a, Exponent b) = default;
  friend std::strong_ordering operator<=>(Exponent a, Exponent b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  /// "p" or "p/q".
  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }
  static Exponent parse(const std::string& text);

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Exponent min(Exponent a, Exponent b) { return a < b ? a : b; }
inline Exponent max(Exponent a, Exponent b) { return a < b ? b : a; }

}  // namespace infinilie

#include "infinilie/scalar.hpp"

#include <sstream>

namespace infinilie {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error("not a rational: " + text);
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& n = q.get_num();
  const Integer& d = q.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(d.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return make_rational(rn, rd);
}

std::pair<Integer, Integer> squarefree_decompose(const Integer& n) {
  if (n <= 0) throw DomainError("square-free part of a non-positive integer");
  Integer rest = n;
  Integer free = 1;
  Integer root = 1;
  // After trial division up to p with p³ > rest, the cofactor has at most two
  // prime factors, so it is square-free unless it is a perfect square.
  unsigned long p = 2;
  for (; Integer(p) * p * p <= rest; ++p) {
    if (p > 2'000'000) throw Error("radicand too large to factor");
    unsigned long mult = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++mult;
    }
    for (unsigned long k = 0; k < mult / 2; ++k) root *= p;
    if (mult % 2 == 1) free *= p;
  }
  if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    root *= s;
  } else {
    free *= rest;
  }
  return {free, root};
}

// ---------------------------------------------------------------- QuadExt

QuadExt::QuadExt(Rational a, Rational b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) == 0) {
    d_ = 1;
    return;
  }
  if (radicand <= 0) throw DomainError("radicand must be positive");
  auto [free, root] = squarefree_decompose(Integer(static_cast<long>(radicand)));
  b_ *= Rational(root);
  if (free == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 1;
  } else {
    d_ = free.get_si();
  }
}

QuadExt QuadExt::sqrt_of(std::int64_t d) { return QuadExt(0, 1, d); }

std::int64_t QuadExt::common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational()) return y.d_;
  if (y.is_rational() || x.d_ == y.d_) return x.d_;
  throw IncompatibleExtension("sqrt(" + std::to_string(x.d_) + ") and sqrt(" +
                              std::to_string(y.d_) + ")");
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  QuadExt r;
  if (x.is_rational() && y.is_rational()) {
    r.a_ = x.a_ + y.a_;
    return r;
  }
  r.d_ = QuadExt::common_radicand(x, y);
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  if (sgn(r.b_) == 0) r.d_ = 1;
  return r;
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  QuadExt r;
  if (x.is_rational() && y.is_rational()) {
    r.a_ = x.a_ - y.a_;
    return r;
  }
  r.d_ = QuadExt::common_radicand(x, y);
  r.a_ = x.a_ - y.a_;
  r.b_ = x.b_ - y.b_;
  if (sgn(r.b_) == 0) r.d_ = 1;
  return r;
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  QuadExt r;
  if (x.is_rational() && y.is_rational()) {
    r.a_ = x.a_ * y.a_;
    return r;
  }
  r.d_ = QuadExt::common_radicand(x, y);
  r.a_ = x.a_ * y.a_ + Rational(static_cast<long>(r.d_)) * x.b_ * y.b_;
  r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  if (sgn(r.b_) == 0) r.d_ = 1;
  return r;
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * inv(y); }

void QuadExt::add_mul(const QuadExt& x, const QuadExt& y) {
  if (is_rational() && x.is_rational() && y.is_rational()) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), x.a_.get_mpq_t(), y.a_.get_mpq_t());
    mpq_add(a_.get_mpq_t(), a_.get_mpq_t(), tmp.get_mpq_t());
    return;
  }
  *this = *this + x * y;
}

int sign(const QuadExt& x) {
  const int sa = sgn(x.a());
  const int sb = sgn(x.b());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational lhs = x.a() * x.a();
  const Rational rhs = Rational(static_cast<long>(x.radicand())) * x.b() * x.b();
  return lhs > rhs ? sa : sb;
}

QuadExt inv(const QuadExt& x) {
  if (is_zero(x)) throw DivisionByZero();
  if (x.is_rational()) return QuadExt(1 / x.a());
  const Rational norm =
      x.a() * x.a() - Rational(static_cast<long>(x.radicand())) * x.b() * x.b();
  return QuadExt(x.a() / norm, -x.b() / norm, x.radicand());
}

std::optional<QuadExt> sqrt_in(const QuadExt& x, std::int64_t radicand) {
  if (is_zero(x)) return QuadExt(0);
  if (sign(x) < 0) return std::nullopt;
  if (x.is_rational()) {
    if (auto r = rational_sqrt(x.a())) return QuadExt(*r);
    // √(p/q) = √(pq)/q
    const Integer pq = x.a().get_num() * x.a().get_den();
    auto [free, root] = squarefree_decompose(pq);
    if (!free.fits_slong_p() || free.get_si() != radicand) return std::nullopt;
    return QuadExt(0, make_rational(root, x.a().get_den()), radicand);
  }
  // (p + q√d)² = a + b√d  ⇔  p² + d q² = a, 2pq = b.
  const Rational d(static_cast<long>(x.radicand()));
  const auto n = rational_sqrt(x.a() * x.a() - d * x.b() * x.b());
  if (!n) return std::nullopt;
  for (const Rational& cand : {Rational((x.a() + *n) / 2), Rational((x.a() - *n) / 2)}) {
    const auto p = rational_sqrt(cand);
    if (!p || sgn(*p) == 0) continue;
    QuadExt r(*p, x.b() / (2 * *p), x.radicand());
    if (sign(r) < 0) r = -r;
    return r;
  }
  return std::nullopt;
}

std::string QuadExt::str() const {
  if (is_rational()) return to_string(a_);
  const std::string root = "sqrt(" + std::to_string(d_) + ")";
  auto coeff_times_root = [&](const Rational& c) {
    return c == 1 ? root : to_string(c) + "*" + root;
  };
  if (sgn(a_) == 0) return b_ == -1 ? "-" + root : coeff_times_root(b_);
  if (sgn(b_) > 0) return to_string(a_) + " + " + coeff_times_root(b_);
  return to_string(a_) + " - " + coeff_times_root(Rational(-b_));
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

// ------------------------------------------------------------ GaussScalar

GaussScalar operator*(const GaussScalar& x, const GaussScalar& y) {
  if (x.is_real() && y.is_real()) return {x.re_ * y.re_};
  return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
}

GaussScalar operator/(const GaussScalar& x, const GaussScalar& y) { return x * inv(y); }

void GaussScalar::add_mul(const GaussScalar& x, const GaussScalar& y) {
  re_.add_mul(x.re_, y.re_);
  if (!x.is_real() && !y.is_real()) re_.add_mul(-x.im_, y.im_);
  if (!y.is_real()) im_.add_mul(x.re_, y.im_);
  if (!x.is_real()) im_.add_mul(x.im_, y.re_);
}

int sign(const GaussScalar& x) {
  if (!x.is_real()) throw NotOrdered();
  return sign(x.re());
}

GaussScalar inv(const GaussScalar& x) {
  if (x.is_real()) return {inv(x.re())};
  const QuadExt n = inv(x.re() * x.re() + x.im() * x.im());
  return {x.re() * n, -x.im() * n};
}

std::optional<GaussScalar> sqrt_in(const GaussScalar& x, std::int64_t radicand) {
  if (!x.is_real()) return std::nullopt;
  if (auto r = sqrt_in(x.re(), radicand)) return GaussScalar(*r);
  return std::nullopt;
}

QuadExt real_value(const GaussScalar& x) {
  if (!x.is_real()) throw NotOrdered();
  return x.re();
}

std::string GaussScalar::str() const {
  if (is_real()) return re_.str();
  std::string im_part;
  bool negative = false;
  if (im_.is_rational()) {
    Rational c = im_.a();
    if (sgn(c) < 0 && !is_zero(re_)) {
      negative = true;
      c = -c;
    }
    if (c == 1) {
      im_part = "i";
    } else if (c == -1) {
      im_part = "-i";
    } else {
      im_part = to_string(c) + "*i";
    }
  } else {
    im_part = "(" + im_.str() + ")*i";
  }
  if (is_zero(re_)) return im_part;
  return re_.str() + (negative ? " - " : " + ") + im_part;
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& x) { return os << x.str(); }

}  // namespace infinilie

#include "infinilie/parse.hpp"

#include <cctype>

namespace infinilie {

namespace {

constexpr std::int64_t kParseHeadroom = 16;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GaussSeries parse() {
    GaussSeries v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("expected one of: '+', '-', '*', '/', end of input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("syntax error: " + expected, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    if (!at_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  GaussSeries expr() {
    GaussSeries v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  GaussSeries term() {
    GaussSeries v = factor();
    for (;;) {
      if (accept('*')) {
        v = v * factor();
      } else if (accept('/')) {
        v = v / factor();
      } else {
        return v;
      }
    }
  }

  GaussSeries factor() {
    if (accept('-')) return -factor();
    skip_ws();
    const bool is_eps = pos_ < text_.size() && text_[pos_] == 'e' &&
                        (pos_ + 1 >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_ + 1])));
    if (is_eps) {
      ++pos_;
      const Exponent k = accept('^') ? power() : Exponent(1);
      return GaussSeries::monomial(GaussScalar(1), k);
    }
    GaussSeries base = atom();
    if (accept('^')) return pow(base, power());
    return base;
  }

  Exponent power() {
    if (accept('(')) {
      const bool neg = accept('-');
      const std::int64_t num = std::stoll(digits());
      std::int64_t den = 1;
      if (accept('/')) den = std::stoll(digits());
      expect(')');
      return Exponent(neg ? -num : num, den);
    }
    const bool neg = accept('-');
    const std::int64_t k = std::stoll(digits());
    return Exponent(neg ? -k : k);
  }

  GaussSeries atom() {
    skip_ws();
    if (at_digit()) return GaussSeries(GaussScalar(Rational(digits())));
    if (accept('(')) {
      GaussSeries v = expr();
      expect(')');
      return v;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      GaussSeries v = expr();
      expect(')');
      return sqrt(v);
    }
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return GaussSeries(GaussScalar::i());
    }
    fail("expected one of: integer, 'e', 'i', '(', 'sqrt(', '-'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GaussSeries parse_gauss_expr(std::string_view text) {
  const Exponent target = current_context().trunc;
  GaussSeries v;
  {
    Context wide = current_context();
    wide.trunc = target + Exponent(kParseHeadroom);
    ContextGuard guard(wide);
    v = Parser(text).parse();
  }
  return v.truncated(target);
}

ValSeries parse_expr(std::string_view text) {
  const GaussSeries v = parse_gauss_expr(text);
  if (!is_real(v)) throw Error("expression is not real: " + std::string(text));
  return to_real(v);
}

GaussScalar parse_scalar(std::string_view text) {
  const GaussSeries v = parse_gauss_expr(text);
  for (const auto& t : v.terms())
    if (!(t.exp == Exponent(0))) throw Error("not a constant: " + std::string(text));
  return v.coeff(Exponent(0));
}

}  // namespace infinilie

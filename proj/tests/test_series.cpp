#include "doctest.h"

#include "infinilie/parse.hpp"
#include "infinilie/sampling.hpp"

using namespace infinilie;

namespace {

ValSeries P(const char* text) { return parse_expr(text); }
ValSeries eps() { return ValSeries::epsilon(); }

}  // namespace

TEST_CASE("series arithmetic") {
  CHECK((P("1 + e") + P("2 - e")).identical(ValSeries(3)));
  CHECK(P("e^(1/2)") * P("e^(1/2)") == eps());
  CHECK(P("(1 + e)*(1 - e)") == P("1 - e^2"));
}

TEST_CASE("inverse with back-multiplication") {
  ContextGuard g(Context{Exponent(4), 12, 1});
  const ValSeries x = P("1 + e");
  const ValSeries y = inv(x);
  CHECK(y.identical(P("1 - e + e^2 - e^3")));
  CHECK(x * y == ValSeries(1));
  CHECK(inv(eps()).identical(ValSeries::monomial(QuadExt(1), Exponent(-1), Exponent(2))));
  CHECK(inv(ValSeries(2)) == ValSeries(QuadExt(parse_rational("1/2"))));
  CHECK_THROWS_AS(inv(ValSeries()), DivisionByZero);
}

TEST_CASE("ordering") {
  CHECK(cmp(eps(), ValSeries(QuadExt(parse_rational("1/1000000")))) == SeriesOrder::LT);
  CHECK(cmp(P("e^(1/2)"), eps()) == SeriesOrder::GT);
  const ValSeries x = P("3 - 2*e");
  CHECK(cmp(x, x) == SeriesOrder::EQ_mod_trunc);
  CHECK(sign(P("-e^3 + e^4")) == -1);
}

TEST_CASE("standard part and classification") {
  CHECK(standard_part(P("2 + 3*e + e^2")) == QuadExt(2));
  CHECK(standard_part(P("e^(1/2)")) == QuadExt(0));
  CHECK_THROWS_WITH_AS(standard_part(P("e^(-1)")), doctest::Contains("outside"), DomainError);
  CHECK(classify(P("5*e^2")) == Magnitude::IN_m);
  CHECK(classify(P("3 + e")) == Magnitude::IN_O_UNIT);
  CHECK(classify(P("e^(-2)")) == Magnitude::OUTSIDE_O);
}

TEST_CASE("square root") {
  ContextGuard g(Context{Exponent(3), 12, 1});
  const ValSeries r = sqrt(P("1 + e"));
  CHECK(r.identical(P("1 + e/2 - e^2/8")));
  CHECK(r * r == P("1 + e"));
  CHECK(sqrt(P("e^2")) == eps());
  CHECK_THROWS_WITH_AS(sqrt(ValSeries(2)), "extension required: 2", ExtensionRequired);
}

TEST_CASE("square root with a radicand in context") {
  ContextGuard g(Context{Exponent(6), 12, 2});
  const ValSeries r = sqrt(P("2 + e"));
  CHECK(r * r == P("2 + e"));
}

TEST_CASE("ramification bound") {
  ContextGuard g(Context{Exponent(8), 4, 1});
  CHECK_NOTHROW(P("e^(1/4)"));
  CHECK_THROWS_AS(P("e^(1/5)"), PrecisionError);
}

TEST_CASE("parser") {
  const ValSeries x = P("1 + 2*e^(1/2) - e");
  REQUIRE(x.terms().size() == 3);
  CHECK(x.terms()[0].exp == Exponent(0));
  CHECK(x.terms()[1].exp == Exponent(1, 2));
  CHECK(x.terms()[1].coeff == QuadExt(2));
  CHECK(x.terms()[2].coeff == QuadExt(-1));
  CHECK(P("(1+e)^(-1)") * P("1 + e") == ValSeries(1));
  try {
    P("1 + + e");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(P("i"), Error);
  CHECK(parse_gauss_expr("i*i") == GaussSeries(-1));
}

TEST_CASE("valuation laws on samples") {
  Sampler s(21);
  const SeriesShape shape{Exponent(-1), Exponent(3), 2, 4, 9, true};
  for (int k = 0; k < 300; ++k) {
    const ValSeries x = s.series(shape), y = s.series(shape);
    REQUIRE((x * y).valuation() == Valuation(x.order() + y.order()));
    const Valuation vs = (x + y).valuation();
    REQUIRE(vs >= Valuation(min(x.order(), y.order())));
    if (!(x.order() == y.order())) REQUIRE(vs == Valuation(min(x.order(), y.order())));
  }
}

TEST_CASE("ordered field on samples") {
  Sampler s(22);
  const SeriesShape shape{Exponent(-1), Exponent(3), 2, 4, 9, true};
  for (int k = 0; k < 200; ++k) {
    const ValSeries x = s.series(shape), y = s.series(shape), z = s.series(shape);
    REQUIRE((x + y) + z == x + (y + z));
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x * inv(x) == ValSeries(1));
    if (sign(y - x) > 0) {
      REQUIRE(sign((y + z) - (x + z)) > 0);
      if (sign(z) > 0) REQUIRE(sign(y * z - x * z) > 0);
    }
  }
  const ValSeries e = eps();
  for (int k = 0; k < 20; ++k) REQUIRE(cmp(e, ValSeries(QuadExt(s.positive_rational(1000000)))) == SeriesOrder::LT);
}

TEST_CASE("standard part is a ring map on the valuation ring") {
  Sampler s(23);
  for (int k = 0; k < 200; ++k) {
    ValSeries x = s.series({Exponent(0), Exponent(4), 2, 4, 9, s.coin()});
    ValSeries y = s.series({Exponent(0), Exponent(4), 2, 4, 9, s.coin()});
    REQUIRE(standard_part(x + y) == standard_part(x) + standard_part(y));
    REQUIRE(standard_part(x * y) == standard_part(x) * standard_part(y));
    REQUIRE(classify(x * s.infinitesimal()) == Magnitude::IN_m);
  }
}

TEST_CASE("double inverse on units") {
  Sampler s(24);
  for (int k = 0; k < 200; ++k) {
    const ValSeries u = s.unit();
    REQUIRE(inv(inv(u)) == u);
  }
}

TEST_CASE("print and parse round trip") {
  Sampler s(25);
  const SeriesShape shape{Exponent(-2), Exponent(6), 3, 5, 40, false};
  for (int k = 0; k < 200; ++k) {
    const ValSeries x = s.series(shape);
    REQUIRE(parse_expr(to_expr(x)).identical(x));
  }
  ContextGuard g(Context{Exponent(8), 12, 2});
  const ValSeries r = P("(1 + sqrt(2))*e - 3/4*sqrt(2)*e^(5/2)");
  CHECK(parse_expr(to_expr(r)).identical(r));
}

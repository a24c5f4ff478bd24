#include <doctest.h>

#include "dq/errors.hpp"
#include "dq/expr.hpp"
#include "dq/poly.hpp"
#include "dq/series.hpp"

using namespace dq;

namespace {
const Vars XYZ = make_vars({"x", "y", "z"});

Poly P(const std::string& s) { return parse_poly(s, XYZ); }
}  // namespace

TEST_CASE("poly ring identities") {
  CHECK(P("(x+y)*(x-y)") == P("x^2-y^2"));
  CHECK(P("x^2*y").derivative(0) == P("2*x*y"));

  // plain-partial multi-index derivative
  Exponents I = {2, 0, 0};
  CHECK(P("x^2*y").derivative_multi(I) == P("2*y"));

  CHECK(P("0").is_zero());
  CHECK(!P("0").degree().has_value());
  CHECK(P("x*y*z").degree() == 3);
  CHECK(P("5").degree() == 0);
}

TEST_CASE("poly universe mismatch is rejected") {
  Vars other = make_vars({"a", "b"});
  Poly q = Poly::variable(other, 0);
  CHECK_THROWS_AS(P("x") + q, ParseError);
}

TEST_CASE("poly ring axioms on pseudo-random triples") {
  uint64_t s = 12345;
  auto next = [&]() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
  };
  auto rand_poly = [&]() {
    Poly p(XYZ);
    for (int t = 0; t < 6; ++t) {
      Exponents e = {uint8_t(next() % 3), uint8_t(next() % 3), uint8_t(next() % 3)};
      p.add_term(e, Rational(int(next() % 7) - 3));
    }
    return p;
  };
  for (int i = 0; i < 50; ++i) {
    Poly a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("poly substitution") {
  std::vector<Poly> vals = {P("y+z"), P("y"), P("z")};
  CHECK(P("x^2").substitute(vals) == P("(y+z)^2"));
  CHECK_THROWS_AS(P("x").substitute({P("x")}), ParseError);
}

TEST_CASE("series arithmetic and truncation bookkeeping") {
  ScalarSeries one = scalar_series(Rational(1), 3);
  ScalarSeries lam(Rational(0), 3);
  lam.set_coeff(1, Rational(1));

  // (1+lam)*(1-lam+lam^2-lam^3) == 1 at truncation 3
  ScalarSeries a = one + lam;
  ScalarSeries b = parse_scalar_series("1 - lam + lam^2 - lam^3", 3);
  CHECK(a * b == one);

  // truncation order: min of operands
  ScalarSeries high = parse_scalar_series("1 + lam^5", 6);
  ScalarSeries low = parse_scalar_series("1", 2);
  CHECK((high * low).order() == 2);
  CHECK((high + low).order() == 2);

  // equality compares up to the common truncation order
  CHECK(high == low);

  // valuation and shifts
  CHECK(lam.valuation() == 1);
  CHECK(lam.shifted(2).valuation() == 3);
  CHECK(lam.shifted(2).divided_by_lambda(2) == lam);
  CHECK_THROWS_AS(one.divided_by_lambda(1), std::logic_error);
}

TEST_CASE("exp_nilpotent") {
  ScalarSeries zero(Rational(0), 4);
  CHECK(exp_nilpotent(zero) == scalar_series(Rational(1), 4));

  ScalarSeries la = parse_scalar_series("2*lam - lam^3", 6);
  ScalarSeries e = exp_nilpotent(la);
  ScalarSeries einv = exp_nilpotent(-la);
  CHECK(e * einv == scalar_series(Rational(1), 6));

  CHECK_THROWS_AS(exp_nilpotent(parse_scalar_series("1 + lam", 4)), MathError);

  // poly coefficients
  PolySeries f = parse_poly_series("lam*x + lam^2*y", XYZ, 5);
  PolySeries g = exp_nilpotent(f) * exp_nilpotent(-f);
  CHECK(g == poly_series_constant(P("1"), 5));
}

TEST_CASE("truncation monotonicity") {
  PolySeries a6 = parse_poly_series("x + lam*y", XYZ, 6);
  PolySeries b6 = parse_poly_series("y^2 - lam^2*z + 1/3", XYZ, 6);
  PolySeries prod6 = a6 * b6;
  PolySeries prod3 = a6.truncated(3) * b6.truncated(3);
  CHECK(prod6.truncated(3) == prod3);
  PolySeries e6 = exp_nilpotent(parse_poly_series("lam*x - lam*y^2", XYZ, 6));
  PolySeries e4 = exp_nilpotent(parse_poly_series("lam*x - lam*y^2", XYZ, 4));
  CHECK(e6.truncated(4) == e4);
}

TEST_CASE("canonical printing and round trip") {
  CHECK(to_string(parse_poly_series("x^2*y + 1/2*lam*z", XYZ, 6)) == "x^2*y + 1/2*lam*z");
  CHECK(to_string(parse_poly_series("0", XYZ, 6)) == "0");
  CHECK(to_string(parse_poly_series("z - x", XYZ, 2)) == "-x + z");
  CHECK(to_string(parse_poly_series("lam^2", XYZ, 6)) == "lam^2");
  CHECK(to_string(parse_poly_series("-1/2 + x", XYZ, 0)) == "x - 1/2");

  // canonical output re-parses to an equal value
  uint64_t s = 999;
  auto next = [&]() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
  };
  for (int i = 0; i < 40; ++i) {
    PolySeries p = poly_series_zero(XYZ, 4);
    for (int k = 0; k <= 4; ++k) {
      Poly c(XYZ);
      for (int t = 0; t < 3; ++t) {
        Exponents e = {uint8_t(next() % 3), uint8_t(next() % 3), uint8_t(next() % 3)};
        c.add_term(e, Rational(int(next() % 9) - 4, 1 + int(next() % 4)));
      }
      p.set_coeff(k, c);
    }
    CHECK(parse_poly_series(to_string(p), XYZ, 4) == p);
  }
}

TEST_CASE("parser error paths") {
  CHECK_THROWS_AS(parse_poly_series("x + w", XYZ, 4), ParseError);
  CHECK_THROWS_AS(parse_poly_series("x +", XYZ, 4), ParseError);
  CHECK_THROWS_AS(parse_poly_series("x ^ y", XYZ, 4), ParseError);
  CHECK_THROWS_AS(parse_poly_series("(x", XYZ, 4), ParseError);
  CHECK_THROWS_AS(parse_poly("lam*x", XYZ), ParseError);
  CHECK_THROWS_AS(parse_poly_series("x~y", XYZ, 4), ParseError);
}

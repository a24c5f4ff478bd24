#include <doctest.h>

#include <gmpxx.h>

#include "dq/errors.hpp"
#include "dq/rational.hpp"

using dq::Rational;

TEST_CASE("rational basic arithmetic and canonical form") {
  Rational a(2, 4);
  CHECK(a.small_num() == 1);
  CHECK(a.small_den() == 2);
  CHECK(a.str() == "1/2");

  Rational b(-3, -6);
  CHECK(b == a);

  Rational c(3, -6);
  CHECK(c.small_num() == -1);
  CHECK(c.small_den() == 2);

  CHECK((a + c).is_zero());
  CHECK((a * Rational(2)).is_one());
  CHECK(Rational(7) / Rational(7) == Rational(1));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(5, 3) == Rational(-5, 3));
  CHECK(Rational(-5, 3).abs() == Rational(5, 3));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-1, 2) > Rational(-2, 3));
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(1, 0), dq::MathError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), dq::MathError);
  CHECK_THROWS_AS(Rational(0).inverse(), dq::MathError);
  CHECK_THROWS_AS(Rational::from_string("1/2/3"), dq::ParseError);
  CHECK_THROWS_AS(Rational::from_string("a"), dq::ParseError);
  CHECK_THROWS_AS(Rational::from_string(""), dq::ParseError);
  CHECK_THROWS_AS(Rational(3, 2).as_int64(), dq::MathError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::from_string("3") == Rational(3));
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK(Rational::from_string("0") .is_zero());
  CHECK(Rational::from_string("123456789012345678901234567890").str() ==
        "123456789012345678901234567890");
}

TEST_CASE("rational overflow promotes and demotes transparently") {
  // 2^80 by repeated squaring of small values
  Rational big(1);
  for (int i = 0; i < 80; ++i) big *= Rational(2);
  CHECK(!big.is_small());
  CHECK(big.str() == mpz_class(mpz_class(1) << 80).get_str());

  // shrinking back demotes to the inline representation
  Rational r = big / big;
  CHECK(r.is_one());
  CHECK(r.is_small());

  Rational x = big + Rational(1) - big;
  CHECK(x == Rational(1));
  CHECK(x.is_small());
}

TEST_CASE("rational randomized cross-check against GMP") {
  // deterministic pseudo-random walk through mixed-size values
  uint64_t s = 0x9e3779b97f4a7c15ULL;
  auto next = [&]() {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  Rational acc(0);
  mpq_class ref(0);
  for (int i = 0; i < 2000; ++i) {
    long long n = static_cast<long long>(next() % 2000001) - 1000000;
    long long d = static_cast<long long>(next() % 1000000) + 1;
    Rational r(n, d);
    mpq_class q(static_cast<long>(n), static_cast<long>(d));
    q.canonicalize();
    switch (next() % 3) {
      case 0:
        acc += r;
        ref += q;
        break;
      case 1:
        acc -= r;
        ref -= q;
        break;
      default:
        acc *= r;
        ref *= q;
        break;
    }
    REQUIRE(acc.to_mpq() == ref);
  }
}

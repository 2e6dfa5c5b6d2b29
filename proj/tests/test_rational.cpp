#include <doctest.h>

#include <random>
#include <stdexcept>

#include "degseq/rational.hpp"
#include "oracle_helpers.hpp"

using degseq::Rational;

TEST_CASE("rational addition") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  Rational a(-7, 9);
  CHECK(Rational(0) + a == a);
  CHECK(Rational(-1, 2) + Rational(1, 2) == Rational(0));
}

TEST_CASE("rational multiplication") {
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  Rational a(11, 13);
  CHECK(a * Rational(1) == a);
  CHECK(a * Rational(0) == Rational(0));
}

TEST_CASE("rational division") {
  CHECK(Rational(5, 6) / Rational(1, 3) == Rational(5, 2));
  Rational a(-4, 7);
  CHECK(a / a == Rational(1));
  CHECK(Rational(1) / Rational(-2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("canonical form") {
  CHECK(Rational(2, 4).num() == 1);
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(1, -2).to_string() == "-1/2");  // sign normalizes into the numerator
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);

  std::mt19937 rng(12345);
  for (int i = 0; i < 500; ++i) {
    Rational a = oracle::random_rational(rng);
    Rational b = oracle::random_rational(rng);
    for (const Rational& r : {a + b, a - b, a * b}) {
      CHECK(sgn(r.den()) > 0);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(987);
  for (int i = 0; i < 300; ++i) {
    Rational a = oracle::random_rational(rng);
    Rational b = oracle::random_rational(rng);
    Rational c = oracle::random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
  }
}

TEST_CASE("text form and parsing") {
  CHECK(Rational(22, 7).to_string() == "22/7");
  CHECK(Rational(-5).to_string() == "-5");  // denominator 1 omitted
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("+5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2x"), std::invalid_argument);

  std::mt19937 rng(5150);
  for (int i = 0; i < 200; ++i) {
    Rational a = oracle::random_rational(rng);
    CHECK(Rational::parse(a.to_string()) == a);
  }
}

TEST_CASE("powers and ordering") {
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2).abs() == Rational(1, 2));
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
}

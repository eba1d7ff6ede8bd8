#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ars/rational.hpp"

using ars::Rational;

TEST_CASE("construction normalizes to lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(7, 7).num() == 1);
  CHECK(Rational(7, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), ars::Error);
}

TEST_CASE("ordering is the rational order") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK(Rational(5) == Rational(10, 2));
  CHECK_FALSE(Rational(1, 2) < Rational(1, 2));
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), ars::Error);
}

TEST_CASE("floor") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(6, 2).floor() == 3);
  CHECK(Rational(0).floor() == 0);
  CHECK(Rational(-1, 3).floor() == -1);
}

TEST_CASE("lcm of rationals") {
  // lcm(a/b, c/d) = lcm(a,c)/gcd(b,d).
  CHECK(Rational::lcm(Rational(1, 2), Rational(1, 3)) == Rational(1));
  CHECK(Rational::lcm(Rational(1, 2), Rational(1, 2)) == Rational(1, 2));
  CHECK(Rational::lcm(Rational(3, 2), Rational(1)) == Rational(3));
  CHECK(Rational::lcm(Rational(2, 3), Rational(1, 6)) == Rational(2, 3));
  CHECK_THROWS_AS(Rational::lcm(Rational(0), Rational(1)), ars::Error);

  // The result is an integer multiple of both operands.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(1, 12);
  for (int k = 0; k < 200; ++k) {
    const Rational a(d(rng), d(rng)), b(d(rng), d(rng));
    const Rational l = Rational::lcm(a, b);
    CHECK((l / a).is_integer());
    CHECK((l / b).is_integer());
  }
}

TEST_CASE("parse and print round trip") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("1.25") == Rational(5, 4));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational(3, 2).to_string() == "3/2");
  CHECK(Rational(-5).to_string() == "-5");
  CHECK_THROWS_AS(Rational::parse("x"), ars::Error);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-30, 30);
  std::uniform_int_distribution<int> e(1, 30);
  for (int k = 0; k < 200; ++k) {
    const Rational r(d(rng), e(rng));
    CHECK(Rational::parse(r.to_string()) == r);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cosetwalk/error.hpp"
#include "cosetwalk/rational.hpp"

using cosetwalk::BigInt;
using cosetwalk::Rational;

TEST_CASE("construction normalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, 5).den().is_one());
  CHECK_THROWS_AS(Rational(1, 0), cosetwalk::Error);
}

TEST_CASE("parsing and printing") {
  CHECK(Rational::parse("3/4").to_string() == "3/4");
  CHECK(Rational::parse("-6/8").to_string() == "-3/4");
  CHECK(Rational::parse("7").to_string() == "7");
  CHECK(Rational::parse("7/1").to_string() == "7");
  CHECK_THROWS_AS(Rational::parse("a/b"), cosetwalk::ParseError);
}

TEST_CASE("field axioms on random values") {
  std::mt19937_64 rng(17);
  auto rand_rat = [&] {
    long long n = static_cast<long long>(rng() % 2001) - 1000;
    long long d = 1 + static_cast<long long>(rng() % 999);
    return Rational(n, d);
  };
  for (int i = 0; i < 500; ++i) {
    Rational a = rand_rat(), b = rand_rat(), c = rand_rat();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 3) > Rational(-1, 2));
  CHECK(Rational(2, 3) < Rational(1));
  CHECK(Rational(5, 5).is_one());
}

TEST_CASE("pow with negative exponents") {
  CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(Rational::pow(Rational(5), 0) == Rational(1));
  CHECK(Rational::pow(Rational(1, 5), 20) ==
        Rational(BigInt(1), BigInt::pow10(0) * BigInt::pow(BigInt(5), 20)));
  CHECK_THROWS_AS(Rational::pow(Rational(0), -1), cosetwalk::Error);
}

TEST_CASE("exactness far beyond doubles") {
  Rational tiny = Rational::pow(Rational(1, 15), 30);
  Rational back = Rational::pow(tiny, -1);
  CHECK(back == Rational::pow(Rational(15), 30));
  Rational sum(0);
  for (int i = 0; i < 1000; ++i) sum += Rational(1, 3);
  CHECK(sum == Rational(1000, 3));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cosetwalk/error.hpp"
#include "cosetwalk/matrix.hpp"

using namespace cosetwalk;

namespace {

RMat random_matrix(std::mt19937_64& rng, std::size_t n, int span = 9) {
  RMat m(n, RVec(n));
  for (auto& row : m)
    for (auto& x : row)
      x = Rational(static_cast<long long>(rng() % (2 * span + 1)) - span,
                   1 + static_cast<long long>(rng() % 4));
  return m;
}

// Plain cofactor expansion; the test-side determinant oracle.
Rational det_cofactor(const RMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    RMat minor(n - 1, RVec(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[i - 1][cc++] = m[i][c];
      }
    }
    Rational term = m[0][j] * det_cofactor(minor);
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("Bareiss determinant against cofactor expansion") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      RMat m = random_matrix(rng, n);
      CHECK(rm_det(m) == det_cofactor(m));
    }
  CHECK(rm_det(rm_identity(5)) == Rational(1));
  RMat singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(rm_det(singular) == Rational(0));
}

TEST_CASE("null space vectors satisfy Av = 0 and dimensions add up") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 4;
    RMat m = random_matrix(rng, n, 2);
    // Force rank deficiency: last row = sum of the others.
    for (std::size_t j = 0; j < n; ++j) {
      m[n - 1][j] = Rational(0);
      for (std::size_t i = 0; i + 1 < n; ++i) m[n - 1][j] += m[i][j];
    }
    auto basis = rm_null_space(m);
    CHECK(!basis.empty());
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < n; ++i) {
        Rational dot(0);
        for (std::size_t j = 0; j < n; ++j) dot += m[i][j] * v[j];
        CHECK(dot == Rational(0));
      }
    }
    CHECK(rm_det(m) == Rational(0));
  }
}

TEST_CASE("solve_unique") {
  RMat a{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  RVec b{Rational(5), Rational(10)};
  auto x = rm_solve_unique(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1));
  CHECK((*x)[1] == Rational(3));
  // Singular system has no unique solution.
  RMat s{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(!rm_solve_unique(s, {Rational(1), Rational(2)}).has_value());
  // Overdetermined but consistent.
  RMat o{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}};
  auto y = rm_solve_unique(o, {Rational(2), Rational(3), Rational(5)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == Rational(2));
  // Overdetermined and inconsistent.
  CHECK(!rm_solve_unique(o, {Rational(2), Rational(3), Rational(4)}).has_value());
}

TEST_CASE("char poly: known cases and the determinant cross-route") {
  // 2x2 general form.
  RMat m{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 5), Rational(1, 7)}};
  auto cp = rm_char_poly(m);
  REQUIRE(cp.size() == 3);
  CHECK(cp[2] == Rational(1));
  CHECK(cp[1] == -(m[0][0] + m[1][1]));
  CHECK(cp[0] == m[0][0] * m[1][1] - m[0][1] * m[1][0]);
  // Constant coefficient is (-1)^n det, against the Bareiss route.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t n = 2 + trial % 4;
    RMat r = random_matrix(rng, n, 3);
    auto poly = rm_char_poly(r);
    Rational d = rm_det(r);
    CHECK(poly[0] == (n % 2 == 0 ? d : -d));
    CHECK(poly[n] == Rational(1));
  }
}

TEST_CASE("polynomial helpers") {
  // (x - 2)(x + 3) = x^2 + x - 6
  std::vector<Rational> p{Rational(-6), Rational(1), Rational(1)};
  CHECK(poly_eval(p, Rational(2)) == Rational(0));
  CHECK(poly_eval(p, Rational(0)) == Rational(-6));
  auto q = poly_divide_linear(p, Rational(2));
  CHECK(q == std::vector<Rational>{Rational(3), Rational(1)});
  CHECK_THROWS_AS(poly_divide_linear(p, Rational(1)), Error);
  CHECK(poly_mul({Rational(-2), Rational(1)}, {Rational(3), Rational(1)}) == p);
}

TEST_CASE("rational root extraction") {
  // Roots 1, -2/3, 2/5 with multiplicity one.
  std::vector<Rational> p{Rational(1)};
  for (const char* r : {"1", "-2/3", "2/5"})
    p = poly_mul(p, {-Rational::parse(r), Rational(1)});
  auto roots = rational_roots_complete(p);
  REQUIRE(roots.has_value());
  CHECK(*roots == std::vector<Rational>{Rational(1), Rational(2, 5), Rational(-2, 3)});
  // Double root and a zero root.
  std::vector<Rational> q{Rational(1)};
  q = poly_mul(q, {Rational(0), Rational(1)});
  q = poly_mul(q, {-Rational(1, 2), Rational(1)});
  q = poly_mul(q, {-Rational(1, 2), Rational(1)});
  auto qroots = rational_roots_complete(q);
  REQUIRE(qroots.has_value());
  CHECK(*qroots == std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(0)});
  // x^2 - 2 has no rational roots.
  CHECK(!rational_roots_complete({Rational(-2), Rational(0), Rational(1)}).has_value());
}

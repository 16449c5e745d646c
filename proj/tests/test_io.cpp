#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cosetwalk/error.hpp"
#include "cosetwalk/io.hpp"
#include "cosetwalk/shuffle.hpp"

using namespace cosetwalk;

TEST_CASE("group text parsing") {
  GroupSpec spec = parse_group_text(
      "# symmetric group on five points\n"
      "degree 5\n"
      "(1 2)\n"
      "(1 2 3 4 5)\n",
      "test");
  CHECK(spec.degree == 5);
  CHECK(spec.generators.size() == 2);
  CHECK(generate_group(spec).order() == 120);
  CHECK_THROWS_AS(parse_group_text("(1 2)\n", "test"), ParseError);
  CHECK_THROWS_AS(parse_group_text("degree 5\n", "test"), ParseError);
}

TEST_CASE("weight text parsing") {
  auto entries = parse_weight_text(
      "# a two-line weight\n"
      "(1 2)(3 4 5) 1/6\n"
      "() 2\n",
      5, "test");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].first == Permutation::parse_cycles("(1 2)(3 4 5)", 5));
  CHECK(entries[0].second == Rational(1, 6));
  CHECK(entries[1].first.is_identity());
  CHECK(entries[1].second == Rational(2));
  CHECK_THROWS_AS(parse_weight_text("justoneword\n", 5, "test"), ParseError);
}

TEST_CASE("matrix json round trip") {
  RMat m = skewed_matrix(10, 4).matrix;
  RMat back = parse_matrix_json_text(matrix_json_text(m));
  CHECK(rm_equal(m, back));
  CHECK_THROWS_AS(parse_matrix_json_text("[[0.5]]"), ParseError);  // floats rejected
  RVec v = parse_vector_json_text("[\"1/3\", \"2/3\", 0]");
  CHECK(v == RVec{Rational(1, 3), Rational(2, 3), Rational(0)});
}

TEST_CASE("paper orientation is an involution that moves (0,0) to the corner") {
  RMat m = skewed_matrix(10, 4).matrix;
  RMat display = paper_orientation(m);
  CHECK(display[4][4] == m[0][0]);
  CHECK(display[0][4] == m[4][0]);
  CHECK(rm_equal(paper_orientation(display), m));
  RVec v{Rational(1), Rational(2), Rational(3)};
  CHECK(paper_orientation(v) == RVec{Rational(3), Rational(2), Rational(1)});
}

TEST_CASE("csv, table and latex renderings") {
  RMat m{{Rational(0), Rational(1, 2)}, {Rational(1), Rational(3, 4)}};
  CHECK(matrix_csv(m) == "0,1/2\n1,3/4\n");
  std::string table = matrix_table(m, {"a", "b"}, {"x", "y"});
  CHECK(table.find("1/2") != std::string::npos);
  CHECK(table.find('a') != std::string::npos);
  std::string latex = matrix_latex(m);
  CHECK(latex.find("\\cdot") != std::string::npos);       // zero renders as \cdot
  CHECK(latex.find("\\frac{1}{2}") != std::string::npos);
  CHECK(latex.find("\\begin{pmatrix}") != std::string::npos);
}

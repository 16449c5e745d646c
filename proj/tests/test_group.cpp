#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cosetwalk/error.hpp"
#include "cosetwalk/group.hpp"

using namespace cosetwalk;

TEST_CASE("Sym3 from its standard generators") {
  GroupSpec spec = GroupSpec::create(
      3, {Permutation::parse_cycles("(1 2)", 3), Permutation::parse_cycles("(1 2 3)", 3)});
  GroupElements g = generate_group(spec, 100);
  CHECK(g.order() == 6);
  CHECK(g.at(0).is_identity());  // sorted order puts the identity first
  CHECK(g.contains(Permutation::parse_cycles("(1 3)", 3)));
}

TEST_CASE("Sym5 has order 120") {
  GroupSpec spec = GroupSpec::create(
      5, {Permutation::parse_cycles("(1 2)", 5), Permutation::parse_cycles("(1 2 3 4 5)", 5)});
  CHECK(generate_group(spec, 200).order() == 120);
  CHECK(symmetric_group(5).order() == 120);
}

TEST_CASE("cap semantics") {
  GroupSpec sym8 = GroupSpec::create(
      8, {Permutation::parse_cycles("(1 2)", 8),
          Permutation::parse_cycles("(1 2 3 4 5 6 7 8)", 8)});
  CHECK_THROWS_AS(generate_group(sym8, 1000), CapExceededError);
  try {
    generate_group(sym8, 1000);
  } catch (const CapExceededError& e) {
    CHECK(e.reached() > 1000);
  }
}

TEST_CASE("closure under composition and inverse, exhaustively") {
  // Exhaustive closure checks up to order 720 (Sym_6); sampled above that.
  std::vector<GroupElements> groups;
  groups.push_back(symmetric_group(4));
  groups.push_back(symmetric_group(5));
  groups.push_back(symmetric_group(6));
  groups.push_back(generate_group(GroupSpec::create(  // A_5, order 60
      5, {Permutation::parse_cycles("(1 2 3)", 5),
          Permutation::parse_cycles("(3 4 5)", 5)})));
  groups.push_back(generate_group(GroupSpec::create(  // dihedral on 8 points
      8, {Permutation::parse_cycles("(1 2 3 4 5 6 7 8)", 8),
          Permutation::parse_cycles("(2 8)(3 7)(4 6)", 8)})));
  for (const auto& g : groups) {
    for (const auto& a : g) CHECK(g.contains(a.inverse()));
    std::size_t bad = 0;
    for (const auto& a : g)
      for (const auto& b : g)
        if (!g.contains(compose(a, b))) ++bad;
    CHECK(bad == 0);
  }
  CHECK(groups[3].elements().size() == 60);
  CHECK(groups[4].elements().size() == 16);
  // Sampled closure at Sym_7 (order 5040).
  GroupElements s7 = symmetric_group(7);
  CHECK(s7.order() == 5040);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& a = s7.at(rng() % s7.order());
    const auto& b = s7.at(rng() % s7.order());
    CHECK(s7.contains(compose(a, b)));
    CHECK(s7.contains(a.inverse()));
  }
}

TEST_CASE("generation is independent of generator order") {
  std::vector<Permutation> gens{Permutation::parse_cycles("(1 2)", 4),
                                Permutation::parse_cycles("(1 2 3 4)", 4)};
  GroupElements a = generate_group(GroupSpec::create(4, gens));
  std::swap(gens[0], gens[1]);
  GroupElements b = generate_group(GroupSpec::create(4, gens));
  REQUIRE(a.order() == b.order());
  for (std::size_t i = 0; i < a.order(); ++i) CHECK(a.at(i) == b.at(i));
}

TEST_CASE("left division table matches direct computation") {
  GroupElements g = symmetric_group(4);
  const auto* table = g.left_division_table();
  REQUIRE(table != nullptr);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint32_t a = rng() % g.order(), b = rng() % g.order();
    Permutation expect = compose(g.at(a).inverse(), g.at(b));
    CHECK(g.at((*table)[a * g.order() + b]) == expect);
  }
  const auto& inv = g.inverse_table();
  for (std::uint32_t i = 0; i < g.order(); ++i) CHECK(g.at(inv[i]) == g.at(i).inverse());
}

TEST_CASE("degree mismatch in the group spec is rejected") {
  CHECK_THROWS_AS(GroupSpec::create(4, {Permutation::identity(3)}), DegreeMismatchError);
  CHECK_THROWS_AS(GroupSpec::create(4, {}), InvalidParameterError);
}

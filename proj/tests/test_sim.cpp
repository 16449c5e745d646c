#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "cosetwalk/sim.hpp"

using namespace cosetwalk;

TEST_CASE("splitmix64 reference sequence") {
  // First outputs for seed 1234567, from the published reference
  // implementation of SplitMix64.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ull);
  CHECK(rng.next() == 3203168211198807973ull);
  CHECK(rng.next() == 9817491932198370423ull);
}

TEST_CASE("bounded draws are in range and deterministic") {
  SplitMix64 a = SplitMix64::stream(99, 0);
  SplitMix64 b = SplitMix64::stream(99, 0);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t x = a.next_below(15);
    CHECK(x < 15);
    CHECK(x == b.next_below(15));
  }
  SplitMix64 c = SplitMix64::stream(99, 1);
  bool any_diff = false;
  SplitMix64 a2 = SplitMix64::stream(99, 0);
  for (int i = 0; i < 100; ++i) any_diff |= (a2.next() != c.next());
  CHECK(any_diff);
}

TEST_CASE("identical seeds give identical trajectories") {
  SimConfig config = SimConfig::create(ShuffleParams::create(10, 4), 2000, 1, 31337, 4u);
  Trajectory t1 = simulate(config);
  Trajectory t2 = simulate(config);
  CHECK(t1.types == t2.types);
  REQUIRE(t1.types.size() == 2001);
  SimConfig other = SimConfig::create(ShuffleParams::create(10, 4), 2000, 1, 31338, 4u);
  CHECK(simulate(other).types != t1.types);
}

TEST_CASE("replicates run on independent streams, reproducibly") {
  SimConfig config = SimConfig::create(ShuffleParams::create(10, 4), 300, 4, 2025, 4u);
  auto batch1 = simulate_many(config);
  auto batch2 = simulate_many(config);
  REQUIRE(batch1.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(batch1[i].types == batch2[i].types);
  CHECK(batch1[0].types == simulate(config).types);  // replicate 0 is stream 0
  CHECK(batch1[0].types != batch1[1].types);
}

TEST_CASE("first step from the identity lands at type 0 with probability 1") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SimConfig c = SimConfig::create(ShuffleParams::create(10, 4), 1, 1, seed,
                                    Permutation::identity(10));
    Trajectory t = simulate(c);
    CHECK(t.types[0] == 4);
    CHECK(t.types[1] == 0);
  }
}

TEST_CASE("support constraint z <= r - x holds along a long run") {
  SimConfig config = SimConfig::create(ShuffleParams::create(10, 4), 100000, 1, 777, 4u);
  Trajectory t = simulate(config);
  for (std::size_t i = 0; i + 1 < t.types.size(); ++i)
    CHECK(t.types[i + 1] <= 4 - t.types[i]);
}

TEST_CASE("uniformity of shuffle sampling at n=10, r=4") {
  ShuffleParams params = ShuffleParams::create(10, 4);
  const unsigned long long count = shuffle_count(params);
  REQUIRE(count == 15);
  SplitMix64 rng = SplitMix64::stream(2718, 0);
  const unsigned long draws = 1000000;
  std::vector<unsigned long> freq(count, 0);
  for (unsigned long i = 0; i < draws; ++i) ++freq[rng.next_below(count)];
  const double p = 1.0 / static_cast<double>(count);
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(draws));
  for (unsigned long long s = 0; s < count; ++s) {
    double hat = static_cast<double>(freq[s]) / static_cast<double>(draws);
    CHECK(std::abs(hat - p) < 5 * sigma);
  }
}

TEST_CASE("empirical matrix: deterministic row and missing rows") {
  Trajectory t;
  t.types = {4, 0, 3, 1, 2, 1, 2, 2, 1, 0, 3};
  EmpiricalMatrix em = empirical_matrix({t}, 4);
  CHECK(em.row_totals[4] == 1);
  CHECK(em.p_hat[4][0] == 1.0);
  // From type 4 the only move is to type 0, so its empirical row is exact.
  SimConfig config = SimConfig::create(ShuffleParams::create(10, 4), 20000, 1, 11, 4u);
  EmpiricalMatrix sim_em = empirical_matrix({simulate(config)}, 4);
  CHECK(sim_em.p_hat[4][0] == 1.0);
  for (unsigned z = 1; z <= 4; ++z) CHECK(sim_em.counts[4][z] == 0);
  // A trajectory that never visits type 4 reports the row as missing.
  Trajectory partial;
  partial.types = {0, 2, 1, 2, 0, 2};
  EmpiricalMatrix missing = empirical_matrix({partial}, 4);
  CHECK(!missing.row_observed[4]);
  CHECK(missing.row_observed[2]);
}

TEST_CASE("the projected walk is empirically Markov (second-order check)") {
  // Conditional next-type frequencies given (previous, current) must match
  // the exact row for the current type, within 5 sigma.
  SimConfig config = SimConfig::create(ShuffleParams::create(10, 4), 200000, 1, 90210, 4u);
  Trajectory t = simulate(config);
  RationalChain q = skewed_matrix(10, 4);
  std::map<std::pair<unsigned, unsigned>, std::vector<unsigned long>> counts;
  for (std::size_t i = 0; i + 2 < t.types.size(); ++i) {
    auto key = std::make_pair(t.types[i], t.types[i + 1]);
    auto& row = counts[key];
    if (row.empty()) row.assign(5, 0);
    ++row[t.types[i + 2]];
  }
  for (const auto& [key, row] : counts) {
    unsigned long total = 0;
    for (unsigned long c : row) total += c;
    if (total < 500) continue;  // skip starved contexts
    for (unsigned z = 0; z <= 4; ++z) {
      double p = q.matrix[key.second][z].to_double();
      double sigma = std::sqrt(p * (1 - p) / static_cast<double>(total));
      double hat = static_cast<double>(row[z]) / static_cast<double>(total);
      CHECK(std::abs(hat - p) <= 5 * sigma + 1e-12);
    }
  }
}

TEST_CASE("empirical_tv: guard, t = 0 determinism, and bound comparison") {
  ShuffleParams params = ShuffleParams::create(10, 4);
  Distribution point = Distribution::point_mass(5, 4);
  CHECK_THROWS_AS(empirical_tv(params, point, 1, 100, 1), InvalidParameterError);
  // t = 0 with a deterministic start reproduces theta exactly.
  EmpiricalTvReport at0 = empirical_tv(params, point, 0, 10000, 42);
  CHECK(at0.empirical_vs_exact == Rational(0));
  // The worked starting distribution; exact TV within the bound for t = 1..6.
  Distribution theta = Distribution::create(
      {Rational(0), Rational(4, 7), Rational(2, 7), Rational(4, 35), Rational(1, 35)});
  for (unsigned long t = 1; t <= 6; ++t) {
    EmpiricalTvReport rep = empirical_tv(params, theta, t, 10000, 7 + t);
    CHECK(rep.exact_within_bound);
    CHECK(rep.exact_vs_stationary * rep.exact_vs_stationary <= rep.bound_squared);
  }
  // Tighter empirical check at t = 3 with 10^5 replicates.
  EmpiricalTvReport rep3 = empirical_tv(params, theta, 3, 100000, 1234);
  CHECK(rep3.empirical_vs_exact.to_double() < 0.01);
}

TEST_CASE("occupation frequencies approach pi on a medium run") {
  SimConfig config = SimConfig::create(ShuffleParams::create(10, 4), 200000, 1, 5150, 4u);
  auto freq = occupation_frequencies(simulate(config), 4);
  RVec pi{Rational(15, 210), Rational(80, 210), Rational(90, 210), Rational(24, 210),
          Rational(1, 210)};
  for (unsigned x = 0; x <= 4; ++x) CHECK(std::abs(freq[x] - pi[x].to_double()) < 0.01);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(SimConfig::create(ShuffleParams::create(10, 4), 0, 1, 1, 0u),
                  InvalidParameterError);
  CHECK_THROWS_AS(SimConfig::create(ShuffleParams::create(10, 4), 1, 0, 1, 0u),
                  InvalidParameterError);
  CHECK_THROWS_AS(SimConfig::create(ShuffleParams::create(10, 4), 1, 1, 1, 9u),
                  InvalidParameterError);
  CHECK_THROWS_AS(
      SimConfig::create(ShuffleParams::create(10, 4), 1, 1, 1, Permutation::identity(9)),
      DegreeMismatchError);
}

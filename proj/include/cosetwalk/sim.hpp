#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cosetwalk/chain.hpp"
#include "cosetwalk/perm.hpp"
#include "cosetwalk/shuffle.hpp"

namespace cosetwalk {

/// SplitMix64 (Steele-Lea-Flood), the reference finalizer constants.
/// Integer-only, so sequences are bit-exact across platforms. Stream i of a
/// seed starts from mix(mix(seed) + (i+1) * 0x9E3779B97F4A7C15.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Uniform on [0, bound); unbiased via threshold rejection on raw draws.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct SimConfig {
  ShuffleParams params;
  unsigned long steps = 1;
  unsigned long replicates = 1;
  std::uint64_t seed = 0;
  /// Start at a permutation, or at the canonical representative of a type.
  std::variant<Permutation, unsigned> start = 0u;

  static SimConfig create(ShuffleParams params, unsigned long steps,
                          unsigned long replicates, std::uint64_t seed,
                          std::variant<Permutation, unsigned> start);
};

struct Trajectory {
  std::vector<unsigned> types;  // length steps + 1
  std::uint64_t seed = 0;
};

/// Full-group walk g <- g d with d uniform on D_s, projected to types.
/// Deterministic for a given seed (replicate stream 0).
Trajectory simulate(const SimConfig& config);

/// One trajectory per replicate, on independent RNG streams; merging is
/// order-independent, so the result does not depend on any schedule.
std::vector<Trajectory> simulate_many(const SimConfig& config);

struct EmpiricalMatrix {
  std::vector<std::vector<std::uint64_t>> counts;
  std::vector<std::uint64_t> row_totals;
  std::vector<bool> row_observed;
  /// Row-normalized estimates; rows never observed are all-zero and flagged
  /// as missing in row_observed rather than treated as zero probabilities.
  std::vector<std::vector<double>> p_hat;
  /// sqrt(p_hat (1 - p_hat) / N_row).
  std::vector<std::vector<double>> std_err;
};

/// Transition frequency estimates from one or more trajectories over types
/// 0..r. Throws when no transition was observed at all.
EmpiricalMatrix empirical_matrix(const std::vector<Trajectory>& trajectories, unsigned r);

/// Occupation frequency of each type over all steps (excluding the start).
std::vector<double> occupation_frequencies(const Trajectory& trajectory, unsigned r);

struct EmpiricalTvReport {
  Rational empirical_vs_exact;   // TV(empirical law of M_t, theta Q^t)
  Rational exact_vs_stationary;  // TV(theta Q^t, pi)
  Rational bound_squared;        // (r+1)/4 * chi^2(t)
  bool exact_within_bound;       // exact_vs_stationary^2 <= bound_squared
};

/// Runs `replicates` independent walks of t steps (start type drawn from
/// theta by exact inverse CDF), and compares the empirical law of M_t with
/// the exact theta Q^t, plus the exact TV against the spectral bound.
/// Requires replicates >= 10^4 for meaningful resolution.
EmpiricalTvReport empirical_tv(const ShuffleParams& params, const Distribution& theta,
                               unsigned long t, unsigned long replicates,
                               std::uint64_t seed);

}  // namespace cosetwalk

#include "cosetwalk/sim.hpp"

#include <cmath>

#include "cosetwalk/cosets.hpp"
#include "cosetwalk/error.hpp"

namespace cosetwalk {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(mix64(seed) + (index + 1) * kGolden));
}

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return mix64(state_);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
  if (bound == 0) throw InvalidParameterError("next_below(0)");
  if (bound == 1) return 0;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

SimConfig SimConfig::create(ShuffleParams params, unsigned long steps,
                            unsigned long replicates, std::uint64_t seed,
                            std::variant<Permutation, unsigned> start) {
  if (steps < 1) throw InvalidParameterError("steps must be >= 1");
  if (replicates < 1) throw InvalidParameterError("replicates must be >= 1");
  if (auto* perm = std::get_if<Permutation>(&start)) {
    if (perm->degree() != params.n)
      throw DegreeMismatchError("start permutation degree does not match n");
  } else {
    if (std::get<unsigned>(start) > params.r)
      throw InvalidParameterError("start type exceeds r");
  }
  return SimConfig{std::move(params), steps, replicates, seed, std::move(start)};
}

namespace {

Permutation start_permutation(const SimConfig& config) {
  if (auto* perm = std::get_if<Permutation>(&config.start)) return *perm;
  return canonical_permutation_of_type(config.params.n, config.params.r,
                                       std::get<unsigned>(config.start));
}

// One walk of `steps` steps; writes types[0..steps]. The composition runs on
// raw image arrays to keep the hot loop allocation-free.
void run_walk(const ShuffleParams& params, const Permutation& start, unsigned long steps,
              SplitMix64& rng, std::vector<unsigned>& types) {
  const unsigned n = params.n, r = params.r;
  const unsigned long long count = shuffle_count(params);
  types.clear();
  types.reserve(steps + 1);
  std::vector<unsigned> g = start.images();
  std::vector<unsigned> next(n);
  auto type_of_images = [&](const std::vector<unsigned>& images) {
    unsigned t = 0;
    for (unsigned i = 0; i < r; ++i)
      if (images[i] < r) ++t;
    return t;
  };
  types.push_back(type_of_images(g));
  for (unsigned long step = 0; step < steps; ++step) {
    Permutation d = shuffle_at_rank(params, rng.next_below(count));
    const std::vector<unsigned>& di = d.images();
    for (unsigned i = 0; i < n; ++i) next[i] = di[g[i]];
    g.swap(next);
    types.push_back(type_of_images(g));
  }
}

}  // namespace

Trajectory simulate(const SimConfig& config) {
  SplitMix64 rng = SplitMix64::stream(config.seed, 0);
  Trajectory out;
  out.seed = config.seed;
  run_walk(config.params, start_permutation(config), config.steps, rng, out.types);
  return out;
}

std::vector<Trajectory> simulate_many(const SimConfig& config) {
  std::vector<Trajectory> out(config.replicates);
  Permutation start = start_permutation(config);
  for (unsigned long rep = 0; rep < config.replicates; ++rep) {
    SplitMix64 rng = SplitMix64::stream(config.seed, rep);
    out[rep].seed = config.seed;
    run_walk(config.params, start, config.steps, rng, out[rep].types);
  }
  return out;
}

EmpiricalMatrix empirical_matrix(const std::vector<Trajectory>& trajectories, unsigned r) {
  EmpiricalMatrix em;
  em.counts.assign(r + 1, std::vector<std::uint64_t>(r + 1, 0));
  for (const auto& traj : trajectories)
    for (std::size_t i = 0; i + 1 < traj.types.size(); ++i) {
      unsigned from = traj.types[i], to = traj.types[i + 1];
      if (from > r || to > r) throw InvalidParameterError("type out of range in trajectory");
      ++em.counts[from][to];
    }
  em.row_totals.assign(r + 1, 0);
  em.row_observed.assign(r + 1, false);
  em.p_hat.assign(r + 1, std::vector<double>(r + 1, 0.0));
  em.std_err.assign(r + 1, std::vector<double>(r + 1, 0.0));
  bool any = false;
  for (unsigned x = 0; x <= r; ++x) {
    for (unsigned z = 0; z <= r; ++z) em.row_totals[x] += em.counts[x][z];
    if (em.row_totals[x] == 0) continue;
    any = true;
    em.row_observed[x] = true;
    double n = static_cast<double>(em.row_totals[x]);
    for (unsigned z = 0; z <= r; ++z) {
      double p = static_cast<double>(em.counts[x][z]) / n;
      em.p_hat[x][z] = p;
      em.std_err[x][z] = std::sqrt(p * (1.0 - p) / n);
    }
  }
  if (!any) throw InvalidParameterError("no transitions observed");
  return em;
}

std::vector<double> occupation_frequencies(const Trajectory& trajectory, unsigned r) {
  std::vector<double> freq(r + 1, 0.0);
  if (trajectory.types.size() <= 1) return freq;
  for (std::size_t i = 1; i < trajectory.types.size(); ++i) ++freq[trajectory.types[i]];
  for (auto& f : freq) f /= static_cast<double>(trajectory.types.size() - 1);
  return freq;
}

EmpiricalTvReport empirical_tv(const ShuffleParams& params, const Distribution& theta,
                               unsigned long t, unsigned long replicates,
                               std::uint64_t seed) {
  const unsigned r = params.r;
  if (theta.size() != r + 1) throw DimensionError("theta must have r+1 entries");
  if (replicates < 10000)
    throw InvalidParameterError(
        "empirical_tv requires replicates >= 10^4 for the requested resolution");

  // Exact inverse CDF over a common denominator, so sampling stays integer.
  BigInt common(1);
  for (const auto& p : theta.probabilities) common = BigInt::lcm(common, p.den());
  if (!common.fits_int64()) throw InvalidParameterError("theta denominator too large");
  std::uint64_t denom = static_cast<std::uint64_t>(common.to_int64());
  std::vector<std::uint64_t> cumulative(r + 2, 0);
  for (unsigned x = 0; x <= r; ++x) {
    BigInt numer = theta[x].num() * (common / theta[x].den());
    cumulative[x + 1] = cumulative[x] + static_cast<std::uint64_t>(numer.to_int64());
  }

  std::vector<std::uint64_t> final_counts(r + 1, 0);
  std::vector<unsigned> types;
  for (unsigned long rep = 0; rep < replicates; ++rep) {
    SplitMix64 rng = SplitMix64::stream(seed, rep);
    std::uint64_t u = rng.next_below(denom);
    unsigned start_type = 0;
    while (u >= cumulative[start_type + 1]) ++start_type;
    run_walk(params, canonical_permutation_of_type(params.n, r, start_type), t, rng, types);
    ++final_counts[types.back()];
  }

  RationalChain q = params.s && *params.s != r ? type_s_matrix(params.n, r, *params.s)
                                               : skewed_matrix(params.n, r);
  Distribution exact = step_distribution(q, theta, t);
  RVec empirical(r + 1);
  for (unsigned x = 0; x <= r; ++x)
    empirical[x] = Rational(static_cast<long long>(final_counts[x]),
                            static_cast<long long>(replicates));
  Distribution empirical_dist = Distribution::create(std::move(empirical));

  SpectrumPrediction prediction = predicted_spectrum(params.n, r);
  ConvergenceReport report = convergence_report(q, theta, prediction.eigenvalues);
  Rational tv_exact = tv_distance(exact, report.stationary);
  Rational bound2 = report.tv_bound_squared_at(t);
  return EmpiricalTvReport{tv_distance(empirical_dist, exact), tv_exact, bound2,
                           tv_exact * tv_exact <= bound2};
}

}  // namespace cosetwalk

#include "cosetwalk/chain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace cosetwalk {

RationalChain RationalChain::create(std::vector<std::string> states, RMat matrix) {
  const std::size_t n = states.size();
  if (matrix.size() != n) throw DimensionError("state count does not match matrix rows");
  for (const auto& row : matrix) {
    if (row.size() != n) throw DimensionError("transition matrix is not square");
    Rational sum(0);
    for (const auto& x : row) {
      if (x.signum() < 0) throw InvalidParameterError("negative transition probability");
      sum += x;
    }
    if (!sum.is_one()) throw InvalidParameterError("row does not sum to 1 (got " +
                                                   sum.to_string() + ")");
  }
  return RationalChain{std::move(states), std::move(matrix)};
}

Distribution Distribution::create(RVec probabilities) {
  Rational sum(0);
  for (const auto& x : probabilities) {
    if (x.signum() < 0) throw InvalidParameterError("negative probability");
    sum += x;
  }
  if (!sum.is_one())
    throw InvalidParameterError("distribution sums to " + sum.to_string() + ", not 1");
  return Distribution{std::move(probabilities)};
}

Distribution Distribution::point_mass(std::size_t n, std::size_t at) {
  RVec p(n, Rational(0));
  p.at(at) = Rational(1);
  return Distribution{std::move(p)};
}

RationalChain lump(const RationalChain& chain,
                   const std::vector<std::vector<std::size_t>>& partition) {
  const std::size_t n = chain.size();
  std::vector<std::size_t> part_of(n, SIZE_MAX);
  for (std::size_t j = 0; j < partition.size(); ++j) {
    if (partition[j].empty()) throw PartitionError("empty part in partition");
    for (std::size_t s : partition[j]) {
      if (s >= n) throw PartitionError("partition names state out of range");
      if (part_of[s] != SIZE_MAX) throw PartitionError("partition parts overlap");
      part_of[s] = j;
    }
  }
  for (std::size_t s = 0; s < n; ++s)
    if (part_of[s] == SIZE_MAX) throw PartitionError("partition does not cover all states");

  // Row mass vectors over per-row denominators: row x is scaled by the lcm
  // of its own entry denominators, which keeps each pass over a row local.
  // Masses fit int64 whenever the row lcm does (they are bounded by it,
  // since the row sums to 1), and rows with different denominators compare
  // exactly by cross-multiplication in int128. Oversized denominators fall
  // back to BigInt.
  const std::size_t parts = partition.size();
  std::vector<long long> fast(n * parts, 0);
  std::vector<long long> row_denom(n, 1);
  std::vector<BigInt> slow;
  std::vector<BigInt> slow_denom;
  bool small = true;
  for (std::size_t x = 0; x < n && small; ++x) {
    BigInt l(1);
    for (const auto& entry : chain.matrix[x])
      if (!entry.den().is_one() && entry.den() != l) l = BigInt::lcm(l, entry.den());
    if (!l.fits_int64()) {
      small = false;
      break;
    }
    long long l64 = l.to_int64();
    row_denom[x] = l64;
    long long* row_mass = fast.data() + x * parts;
    const RVec& row = chain.matrix[x];
    for (std::size_t y = 0; y < n; ++y) {
      const Rational& q = row[y];
      if (q.is_zero()) continue;
      row_mass[part_of[y]] += q.num().to_int64() * (l64 / q.den().to_int64());
    }
  }
  if (!small) {
    slow.assign(n * parts, BigInt(0));
    slow_denom.assign(n, BigInt(1));
    for (std::size_t x = 0; x < n; ++x) {
      BigInt l(1);
      for (const auto& entry : chain.matrix[x]) l = BigInt::lcm(l, entry.den());
      slow_denom[x] = l;
      for (std::size_t y = 0; y < n; ++y) {
        const Rational& q = chain.matrix[x][y];
        if (q.is_zero()) continue;
        slow[x * parts + part_of[y]] += q.num() * (l / q.den());
      }
    }
  }
  auto mass_at = [&](std::size_t x, std::size_t target) -> Rational {
    if (small) return Rational(fast[x * parts + target], row_denom[x]);
    return Rational(slow[x * parts + target], slow_denom[x]);
  };
  auto same_mass = [&](std::size_t x, std::size_t y, std::size_t target) {
    if (small)
      return static_cast<__int128>(fast[x * parts + target]) * row_denom[y] ==
             static_cast<__int128>(fast[y * parts + target]) * row_denom[x];
    return slow[x * parts + target] * slow_denom[y] == slow[y * parts + target] * slow_denom[x];
  };
  for (std::size_t j = 0; j < parts; ++j) {
    std::size_t x0 = partition[j][0];
    for (std::size_t idx = 1; idx < partition[j].size(); ++idx) {
      std::size_t x = partition[j][idx];
      for (std::size_t target = 0; target < parts; ++target) {
        if (same_mass(x, x0, target)) continue;
        LumpWitness w{x0, x, target, mass_at(x0, target), mass_at(x, target)};
        throw NotLumpableError(
            "chain does not lump: states " + chain.states[x0] + " and " + chain.states[x] +
                " give mass " + w.mass_x.to_string() + " vs " + w.mass_y.to_string() +
                " to part " + std::to_string(target),
            std::move(w));
      }
    }
  }
  std::vector<std::string> labels(parts);
  RMat q = rm_zero(parts, parts);
  for (std::size_t j = 0; j < parts; ++j) {
    std::string label;
    for (std::size_t s : partition[j]) {
      if (!label.empty()) label += "|";
      label += chain.states[s];
    }
    labels[j] = std::move(label);
    for (std::size_t target = 0; target < parts; ++target)
      q[j][target] = mass_at(partition[j][0], target);
  }
  return RationalChain::create(std::move(labels), std::move(q));
}

namespace {

std::vector<char> reachable(const RMat& m, std::size_t start, bool transpose) {
  std::vector<char> seen(m.size(), 0);
  std::queue<std::size_t> bfs;
  bfs.push(start);
  seen[start] = 1;
  while (!bfs.empty()) {
    std::size_t u = bfs.front();
    bfs.pop();
    for (std::size_t v = 0; v < m.size(); ++v) {
      const Rational& edge = transpose ? m[v][u] : m[u][v];
      if (!edge.is_zero() && !seen[v]) {
        seen[v] = 1;
        bfs.push(v);
      }
    }
  }
  return seen;
}

}  // namespace

ErgodicityResult is_ergodic(const RationalChain& chain) {
  const std::size_t n = chain.size();
  if (n == 0) return {true, true};
  std::vector<char> fwd = reachable(chain.matrix, 0, false);
  std::vector<char> bwd = reachable(chain.matrix, 0, true);
  bool irreducible = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!fwd[i] || !bwd[i]) irreducible = false;

  // Period per strongly connected component: gcd of (level[u]+1-level[v])
  // over internal edges; a component with no cycle imposes no constraint.
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::size_t comp_count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != SIZE_MAX) continue;
    std::vector<char> f = reachable(chain.matrix, s, false);
    std::vector<char> b = reachable(chain.matrix, s, true);
    for (std::size_t i = 0; i < n; ++i)
      if (f[i] && b[i] && comp[i] == SIZE_MAX) comp[i] = comp_count;
    ++comp_count;
  }
  bool aperiodic = true;
  for (std::size_t c = 0; c < comp_count && aperiodic; ++c) {
    std::vector<long long> level(n, -1);
    std::size_t start = SIZE_MAX;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) {
        start = i;
        break;
      }
    if (start == SIZE_MAX) continue;
    std::queue<std::size_t> bfs;
    bfs.push(start);
    level[start] = 0;
    while (!bfs.empty()) {
      std::size_t u = bfs.front();
      bfs.pop();
      for (std::size_t v = 0; v < n; ++v) {
        if (chain.matrix[u][v].is_zero() || comp[v] != c) continue;
        if (level[v] < 0) {
          level[v] = level[u] + 1;
          bfs.push(v);
        }
      }
    }
    long long g = 0;
    bool has_edge = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (comp[u] != c || level[u] < 0) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (chain.matrix[u][v].is_zero() || comp[v] != c) continue;
        has_edge = true;
        g = std::gcd(g, level[u] + 1 - level[v]);
      }
    }
    if (has_edge && g != 1) aperiodic = false;
  }
  return {irreducible, aperiodic};
}

Distribution stationary(const RationalChain& chain) {
  if (!is_ergodic(chain).irreducible)
    throw ReducibleChainError("chain is reducible; the invariant distribution is not unique");
  const std::size_t n = chain.size();
  // Rows: (Q^T - I) pi = 0 plus the normalization sum(pi) = 1.
  RMat a(n + 1, RVec(n, Rational(0)));
  RVec b(n + 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = chain.matrix[j][i];
    a[i][i] -= Rational(1);
  }
  for (std::size_t j = 0; j < n; ++j) a[n][j] = Rational(1);
  b[n] = Rational(1);
  auto x = rm_solve_unique(a, b);
  if (!x) throw ReducibleChainError("invariant distribution is not unique");
  return Distribution::create(std::move(*x));
}

ReversibilityResult is_reversible(const RationalChain& chain, const Distribution& pi) {
  if (pi.size() != chain.size()) throw DimensionError("pi has wrong length");
  for (const auto& p : pi.probabilities)
    if (p.signum() <= 0)
      throw InvalidParameterError("reversibility check requires strictly positive pi");
  for (std::size_t x = 0; x < chain.size(); ++x)
    for (std::size_t y = x + 1; y < chain.size(); ++y) {
      Rational lhs = pi[x] * chain.matrix[x][y];
      Rational rhs = pi[y] * chain.matrix[y][x];
      if (lhs != rhs) return {false, std::make_tuple(x, y, lhs, rhs)};
    }
  return {true, std::nullopt};
}

bool verify_eigenvalue(const RationalChain& chain, const Rational& lambda) {
  RMat m = chain.matrix;
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= lambda;
  return rm_det(m).is_zero();
}

std::vector<Rational> char_poly(const RationalChain& chain) {
  if (chain.size() > 64)
    throw DimensionError("char_poly dimension guard exceeded (" +
                         std::to_string(chain.size()) + " > 64)");
  return rm_char_poly(chain.matrix);
}

Distribution step_distribution(const RationalChain& chain, const Distribution& theta,
                               unsigned long t) {
  if (theta.size() != chain.size()) throw DimensionError("theta has wrong length");
  RVec v = theta.probabilities;
  for (unsigned long i = 0; i < t; ++i) v = rv_mat_mul(v, chain.matrix);
  return Distribution::create(std::move(v));
}

Rational tv_distance(const Distribution& mu, const Distribution& nu) {
  if (mu.size() != nu.size()) throw DimensionError("TV distance needs equal lengths");
  Rational sum(0);
  for (std::size_t i = 0; i < mu.size(); ++i) sum += (mu[i] - nu[i]).abs();
  return sum / Rational(2);
}

std::string sqrt_decimal_upper(const Rational& value, unsigned sig_digits) {
  if (value.signum() < 0) throw InvalidParameterError("sqrt of negative rational");
  if (sig_digits == 0) throw InvalidParameterError("need at least one digit");
  if (value.is_zero()) return "0";
  // S = ceil(sqrt(value) * 10^guard); its digit string is the root's.
  const unsigned long guard = sig_digits + 10;
  BigInt scaled_num = value.num() * BigInt::pow10(2 * guard);
  BigInt s = BigInt::isqrt_floor(scaled_num / value.den());
  while (s * s * value.den() < scaled_num) s += BigInt(1);
  std::string digits = s.to_string();
  long long exponent = static_cast<long long>(digits.size()) - 1 - static_cast<long long>(guard);
  // Keep sig_digits digits, rounding up if anything nonzero follows.
  bool extra = false;
  for (std::size_t i = sig_digits; i < digits.size(); ++i)
    if (digits[i] != '0') extra = true;
  if (digits.size() > sig_digits) digits.resize(sig_digits);
  while (digits.size() < sig_digits) digits.push_back('0');
  if (extra) {
    std::size_t i = digits.size();
    while (i-- > 0) {
      if (digits[i] != '9') {
        ++digits[i];
        break;
      }
      digits[i] = '0';
      if (i == 0) {
        digits.insert(digits.begin(), '1');
        digits.pop_back();
        ++exponent;
      }
    }
  }
  // Plain decimal rendering around the exponent.
  std::string out;
  if (exponent >= 0) {
    if (static_cast<std::size_t>(exponent) + 1 >= digits.size()) {
      out = digits;
      out.append(static_cast<std::size_t>(exponent) + 1 - digits.size(), '0');
    } else {
      out = digits.substr(0, static_cast<std::size_t>(exponent) + 1) + "." +
            digits.substr(static_cast<std::size_t>(exponent) + 1);
    }
  } else {
    out = "0.";
    out.append(static_cast<std::size_t>(-exponent) - 1, '0');
    out += digits;
  }
  return out;
}

Rational ConvergenceReport::chi_square_at(unsigned long t) const {
  Rational sum(0);
  for (const auto& [lambda, c2] : coefficients)
    sum += c2 * Rational::pow(lambda, 2 * static_cast<long>(t));
  return sum;
}

Rational ConvergenceReport::tv_bound_squared_at(unsigned long t) const {
  return Rational(static_cast<long long>(num_states), 4) * chi_square_at(t);
}

std::string ConvergenceReport::tv_bound_decimal_at(unsigned long t,
                                                   unsigned sig_digits) const {
  return sqrt_decimal_upper(tv_bound_squared_at(t), sig_digits);
}

namespace {

Rational pi_inner(const RVec& u, const RVec& v, const Distribution& pi) {
  Rational sum(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() || v[i].is_zero()) continue;
    sum += u[i] * v[i] / pi[i];
  }
  return sum;
}

}  // namespace

ConvergenceReport convergence_report(const RationalChain& chain, const Distribution& theta,
                                     const std::vector<Rational>& candidates) {
  if (theta.size() != chain.size()) throw DimensionError("theta has wrong length");
  Distribution pi = stationary(chain);  // throws when reducible
  ReversibilityResult rev = is_reversible(chain, pi);
  if (!rev.reversible) {
    auto [x, y, lhs, rhs] = *rev.witness;
    throw NotReversibleError("chain is not reversible: pi_x Q_xy = " + lhs.to_string() +
                             " but pi_y Q_yx = " + rhs.to_string() + " for states " +
                             std::to_string(x) + ", " + std::to_string(y));
  }

  // Full rational spectrum with multiplicity.
  std::vector<Rational> poly = char_poly(chain);
  std::vector<Rational> spectrum;
  for (const auto& cand : candidates) {
    while (poly.size() > 1 && poly_eval(poly, cand).is_zero()) {
      spectrum.push_back(cand);
      poly = poly_divide_linear(poly, cand);
    }
  }
  if (poly.size() > 1) {
    auto rest = rational_roots_complete(poly);
    if (!rest)
      throw IrrationalSpectrumError(
          "spectrum is not (certifiably) rational; use the approximate mode for "
          "numerical exploration");
    spectrum.insert(spectrum.end(), rest->begin(), rest->end());
  }
  std::sort(spectrum.begin(), spectrum.end(),
            [](const Rational& a, const Rational& b) { return a > b; });

  const std::size_t n = chain.size();
  RVec u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = theta[i] - pi[i];

  // Row eigenvectors: null space of (Q^T - lambda I).
  RMat qt = rm_transpose(chain.matrix);
  std::vector<std::pair<Rational, Rational>> coefficients;
  RVec reconstructed(n, Rational(0));
  std::size_t i = 0;
  while (i < spectrum.size()) {
    std::size_t j = i;
    while (j < spectrum.size() && spectrum[j] == spectrum[i]) ++j;
    const Rational& lambda = spectrum[i];
    const std::size_t mult = j - i;
    if (!lambda.is_one()) {
      RMat m = qt;
      for (std::size_t d = 0; d < n; ++d) m[d][d] -= lambda;
      std::vector<RVec> basis = rm_null_space(m);
      if (basis.size() != mult)
        throw Error("eigenspace dimension " + std::to_string(basis.size()) +
                    " does not match multiplicity " + std::to_string(mult) +
                    " at lambda = " + lambda.to_string());
      // Gram-Schmidt under <,>_pi, unnormalized; c^2 accumulates per lambda.
      std::vector<RVec> ortho;
      Rational c2(0);
      for (auto& b : basis) {
        RVec w = b;
        for (const auto& o : ortho) {
          Rational f = pi_inner(w, o, pi) / pi_inner(o, o, pi);
          if (f.is_zero()) continue;
          for (std::size_t d = 0; d < n; ++d) w[d] -= f * o[d];
        }
        Rational proj = pi_inner(u, w, pi) / pi_inner(w, w, pi);
        c2 += proj * proj * pi_inner(w, w, pi);
        for (std::size_t d = 0; d < n; ++d) reconstructed[d] += proj * w[d];
        ortho.push_back(std::move(w));
      }
      coefficients.emplace_back(lambda, c2);
    }
    i = j;
  }
  if (reconstructed != u)
    throw Error("eigenvector decomposition failed to reconstruct theta - pi");

  ConvergenceReport report;
  report.stationary = std::move(pi);
  report.eigenvalues = std::move(spectrum);
  report.coefficients = std::move(coefficients);
  report.num_states = n;
  // chi^2 at t=0 must equal <theta - pi, theta - pi>.
  Rational direct = pi_inner(u, u, report.stationary);
  if (report.chi_square_at(0) != direct)
    throw Error("chi-square identity failed at t = 0");
  return report;
}

}  // namespace cosetwalk

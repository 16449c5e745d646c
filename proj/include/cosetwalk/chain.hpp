#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosetwalk/error.hpp"
#include "cosetwalk/matrix.hpp"
#include "cosetwalk/rational.hpp"

namespace cosetwalk {

/// Finite Markov chain with an exact rational row-stochastic matrix.
struct RationalChain {
  std::vector<std::string> states;
  RMat matrix;

  /// Validates: square, labels match, entries >= 0, rows sum to exactly 1.
  static RationalChain create(std::vector<std::string> states, RMat matrix);
  std::size_t size() const { return states.size(); }
};

struct Distribution {
  RVec probabilities;

  /// Validates: entries >= 0, sum exactly 1.
  static Distribution create(RVec probabilities);
  static Distribution point_mass(std::size_t n, std::size_t at);
  std::size_t size() const { return probabilities.size(); }
  const Rational& operator[](std::size_t i) const { return probabilities[i]; }
};

struct LumpWitness {
  std::size_t state_x, state_y, part_j;
  Rational mass_x, mass_y;
};

/// Lumpability violated: two states in one part with different mass into
/// some part (the Kemeny-Snell criterion).
class NotLumpableError : public Error {
 public:
  NotLumpableError(const std::string& what, LumpWitness witness)
      : Error(what), witness_(std::move(witness)) {}
  const LumpWitness& witness() const { return witness_; }

 private:
  LumpWitness witness_;
};

/// Quotient chain over the partition when the Kemeny-Snell criterion holds;
/// throws NotLumpableError (with witness) otherwise, PartitionError when the
/// partition does not cover the states disjointly. Part labels join the
/// member labels with "|".
RationalChain lump(const RationalChain& chain,
                   const std::vector<std::vector<std::size_t>>& partition);

/// Exact solution of pi Q = pi, sum(pi) = 1. Throws ReducibleChainError when
/// the chain is not irreducible (the invariant distribution is not unique).
Distribution stationary(const RationalChain& chain);

struct ReversibilityResult {
  bool reversible;
  // (x, y, pi_x*Q_xy, pi_y*Q_yx) for a failing pair
  std::optional<std::tuple<std::size_t, std::size_t, Rational, Rational>> witness;
};

/// Exact detailed-balance check pi_x Q_xy = pi_y Q_yx; pi must be strictly
/// positive.
ReversibilityResult is_reversible(const RationalChain& chain, const Distribution& pi);

struct ErgodicityResult {
  bool irreducible;
  bool aperiodic;
};

ErgodicityResult is_ergodic(const RationalChain& chain);

/// True iff det(Q - lambda I) = 0, by exact fraction-free elimination.
bool verify_eigenvalue(const RationalChain& chain, const Rational& lambda);

/// Characteristic polynomial coefficients (ascending, monic); dimension
/// guard 64.
std::vector<Rational> char_poly(const RationalChain& chain);

Distribution step_distribution(const RationalChain& chain, const Distribution& theta,
                               unsigned long t);

/// Half the L1 distance.
Rational tv_distance(const Distribution& mu, const Distribution& nu);

/// Decimal rendering of sqrt(value) with `sig_digits` significant digits,
/// rounded up so the printed number is still an upper bound.
std::string sqrt_decimal_upper(const Rational& value, unsigned sig_digits);

/// Spectral decomposition of theta against a reversible chain, packaging the
/// chi-square identity and the TV bound.
///
/// Eigenvectors here are row vectors phi with phi Q = lambda phi (the natural
/// side for distributions evolving by right multiplication); they are
/// orthogonal under <u,v> = sum u_z v_z / pi_z, and theta decomposes as
/// pi + sum_lambda c_lambda phi^(lambda). Coefficients are stored as c^2,
/// which keeps everything rational.
class ConvergenceReport {
 public:
  Distribution stationary;
  std::vector<Rational> eigenvalues;  // full spectrum with multiplicity, descending
  std::vector<std::pair<Rational, Rational>> coefficients;  // (lambda, c^2), lambda != 1
  std::size_t num_states = 0;

  /// sum_{lambda != 1} c_lambda^2 lambda^{2t}; equals chi^2(theta Q^t || pi).
  Rational chi_square_at(unsigned long t) const;
  /// Square of the TV bound sqrt(num_states)/2 * sqrt(chi_square_at(t)).
  Rational tv_bound_squared_at(unsigned long t) const;
  std::string tv_bound_decimal_at(unsigned long t, unsigned sig_digits = 30) const;
};

/// Throws NotReversibleError / ReducibleChainError / IrrationalSpectrumError.
/// `candidates` seeds the eigenvalue search (each candidate is verified, never
/// trusted); the remaining spectrum is extracted from the characteristic
/// polynomial.
ConvergenceReport convergence_report(const RationalChain& chain, const Distribution& theta,
                                     const std::vector<Rational>& candidates = {});

}  // namespace cosetwalk

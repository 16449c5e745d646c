#pragma once

#include <optional>
#include <vector>

#include "cosetwalk/chain.hpp"
#include "cosetwalk/perm.hpp"
#include "cosetwalk/rational.hpp"

namespace cosetwalk {

/// Parameters of the skewed r-random-to-top family on n cards. `s` selects
/// the type-s variant (r-s cards from the top r, s from the bottom n-r);
/// absent means the plain skewed shuffle, which is type s = r.
struct ShuffleParams {
  unsigned n = 0;
  unsigned r = 0;
  std::optional<unsigned> s;

  unsigned effective_s() const { return s.value_or(r); }
  static ShuffleParams create(unsigned n, unsigned r, std::optional<unsigned> s = {});
};

/// C(m, k) as uint64; throws on overflow.
unsigned long long binom_u64(unsigned m, unsigned k);

/// The rank-th k-subset of {0..m-1} in lexicographic order.
std::vector<unsigned> unrank_combination(unsigned long long rank, unsigned m, unsigned k);

/// The shuffle moving the cards at `chosen` positions (0-based, sorted) to
/// the top, preserving relative order; maps old position to new position.
Permutation shuffle_from_positions(unsigned n, const std::vector<unsigned>& chosen);

/// The shuffle with the given rank in [0, |D_s|): rank = rank_top * C(n-r, s)
/// + rank_bottom over lex-ordered combination pairs.
Permutation shuffle_at_rank(const ShuffleParams& params, unsigned long long rank);

unsigned long long shuffle_count(const ShuffleParams& params);

/// The full shuffle set D (or D_s) as position permutations.
std::vector<Permutation> shuffle_set(const ShuffleParams& params);

/// A permutation of type x: swaps the last r-x points of {1..r} with the
/// first r-x points of {r+1..2r}.
Permutation canonical_permutation_of_type(unsigned n, unsigned r, unsigned x);

/// Closed-form lumped chain of the plain skewed shuffle on types 0..r:
/// entry (x,z) = C(r-x, z) C(n-2r+x, r-z) / C(n-r, r).
RationalChain skewed_matrix(unsigned n, unsigned r);

/// Closed-form lumped chain of the type-s shuffle (derived double
/// hypergeometric sum; validated against the subset-action oracle in the
/// test suite before being trusted):
/// entry (x,z) = sum_{i+j=z} C(x,i) C(r-x, r-s-i) C(r-x, j) C(n-2r+x, s-j)
///               / (C(r, r-s) C(n-r, s)).
RationalChain type_s_matrix(unsigned n, unsigned r, unsigned s);

/// Weight on intervals [x, y] (x <= y) of the poset {0..r}; drives the
/// up-step involutory walk.
struct IntervalWeight {
  unsigned r = 0;
  RMat values;  // values[x][y], entries with y < x ignored

  static IntervalWeight create(unsigned r, RMat values);
};

/// epsilon-bar^(a,b): interval weight C(a, r-y) C(b, y-x); requires a >= r
/// so every up-set carries positive weight.
IntervalWeight epsilon_bar(unsigned a, unsigned b, unsigned r);

/// Chain of the gamma-weighted involutory walk with up-steps: from x choose
/// y >= x with probability gamma[x,y]/N_x, then move to r-y. Errors when
/// some N_x = 0.
RationalChain involutory_walk(const IntervalWeight& gamma);

/// Exact spectrum and stationary law of the plain skewed shuffle.
/// eigenvalues[i] belongs to x = r-i (display order, leading 1
/// first): (-1)^(r-x) C(r,x) / C(n-r, r-x). stationary is in ascending state
/// order: pi_x = C(r,x) C(n-r, r-x) / C(n,r).
struct SpectrumPrediction {
  std::vector<Rational> eigenvalues;
  Distribution stationary;
  Rational normalizer;
};

SpectrumPrediction predicted_spectrum(unsigned n, unsigned r);

/// Zero pattern A[i][j] = 0 for i+j > r, plus exact certification of the
/// anti-diagonal values (-1)^j A[r-j][j] as eigenvalues (indexed j = 0..r;
/// for the skewed family this is the display order, leading 1 first).
struct AntidiagonalResult {
  bool holds;
  std::vector<Rational> eigenvalues;
};

AntidiagonalResult check_antidiagonal_property(const RationalChain& chain);

/// Normalized convex combination sum_s weights[s] Q_s / sum weights.
/// weights has r+1 entries, not all zero.
RationalChain mixture_matrix(unsigned n, unsigned r, const std::vector<Rational>& weights);

/// Binomial mixture weights C(r, s), which reconstruct the usual
/// r-random-to-top shuffle.
std::vector<Rational> binomial_mixture_weights(unsigned r);

/// Eigenvalue of each Q_s on the simultaneous eigenbasis of Q_r, per type:
/// result[s][i] is the eigenvalue of Q_s on the basis vector of x = r-i.
/// Verifies Q_s Q_t = Q_t Q_s exactly for all pairs first.
std::vector<std::vector<Rational>> simultaneous_spectra(unsigned n, unsigned r);

}  // namespace cosetwalk

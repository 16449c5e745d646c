#include "cosetwalk/shuffle.hpp"

#include <algorithm>
#include <string>

#include "cosetwalk/error.hpp"

namespace cosetwalk {

ShuffleParams ShuffleParams::create(unsigned n, unsigned r, std::optional<unsigned> s) {
  if (r == 0) throw InvalidParameterError("shuffle needs r >= 1");
  if (n <= 2 * r)
    throw InvalidParameterError("skewed shuffle requires n > 2r (got n = " +
                                std::to_string(n) + ", r = " + std::to_string(r) + ")");
  if (s && *s > r)
    throw InvalidParameterError("shuffle type s = " + std::to_string(*s) +
                                " exceeds r = " + std::to_string(r));
  return ShuffleParams{n, r, s};
}

unsigned long long binom_u64(unsigned m, unsigned k) {
  BigInt b = BigInt::binomial(m, k);
  if (!b.fits_int64()) throw InvalidParameterError("binomial too large for enumeration");
  return static_cast<unsigned long long>(b.to_int64());
}

std::vector<unsigned> unrank_combination(unsigned long long rank, unsigned m, unsigned k) {
  if (k > m) throw InvalidParameterError("combination k > m");
  std::vector<unsigned> out;
  out.reserve(k);
  unsigned next = 0;
  for (unsigned remaining = k; remaining > 0; --remaining) {
    // Advance past elements whose block of combinations ends before rank.
    while (true) {
      unsigned long long block = binom_u64(m - next - 1, remaining - 1);
      if (rank < block) break;
      rank -= block;
      ++next;
    }
    out.push_back(next);
    ++next;
  }
  if (rank != 0) throw InvalidParameterError("combination rank out of range");
  return out;
}

Permutation shuffle_from_positions(unsigned n, const std::vector<unsigned>& chosen) {
  std::vector<bool> is_chosen(n, false);
  for (unsigned p : chosen) {
    if (p >= n) throw InvalidParameterError("chosen position out of range");
    is_chosen[p] = true;
  }
  std::vector<unsigned> images(n);
  unsigned top = 0;
  unsigned rest = static_cast<unsigned>(chosen.size());
  for (unsigned p = 0; p < n; ++p) {
    if (is_chosen[p]) images[p] = top++;
    else images[p] = rest++;
  }
  return Permutation::from_images(std::move(images));
}

unsigned long long shuffle_count(const ShuffleParams& params) {
  unsigned s = params.effective_s();
  return binom_u64(params.r, params.r - s) * binom_u64(params.n - params.r, s);
}

Permutation shuffle_at_rank(const ShuffleParams& params, unsigned long long rank) {
  const unsigned n = params.n, r = params.r, s = params.effective_s();
  unsigned long long bottom_count = binom_u64(n - r, s);
  unsigned long long top_rank = rank / bottom_count;
  unsigned long long bottom_rank = rank % bottom_count;
  std::vector<unsigned> chosen = unrank_combination(top_rank, r, r - s);
  for (unsigned b : unrank_combination(bottom_rank, n - r, s)) chosen.push_back(r + b);
  return shuffle_from_positions(n, chosen);
}

std::vector<Permutation> shuffle_set(const ShuffleParams& params) {
  unsigned long long count = shuffle_count(params);
  std::vector<Permutation> out;
  out.reserve(count);
  for (unsigned long long rank = 0; rank < count; ++rank)
    out.push_back(shuffle_at_rank(params, rank));
  return out;
}

Permutation canonical_permutation_of_type(unsigned n, unsigned r, unsigned x) {
  if (x > r || 2 * r > n)
    throw InvalidParameterError("no permutation of type " + std::to_string(x));
  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = i;
  for (unsigned i = x; i < r; ++i) std::swap(images[i], images[i + (r - x)]);
  return Permutation::from_images(std::move(images));
}

namespace {

std::vector<std::string> type_labels(unsigned r) {
  std::vector<std::string> labels(r + 1);
  for (unsigned x = 0; x <= r; ++x) labels[x] = std::to_string(x);
  return labels;
}

}  // namespace

RationalChain skewed_matrix(unsigned n, unsigned r) {
  ShuffleParams::create(n, r);
  const Rational d(BigInt::binomial(n - r, r), BigInt(1));
  RMat m = rm_zero(r + 1, r + 1);
  for (unsigned x = 0; x <= r; ++x)
    for (unsigned z = 0; z <= r; ++z)
      m[x][z] = Rational(BigInt::binomial(r - x, z) * BigInt::binomial(n - 2 * r + x, r - z),
                         BigInt(1)) /
                d;
  return RationalChain::create(type_labels(r), std::move(m));
}

RationalChain type_s_matrix(unsigned n, unsigned r, unsigned s) {
  ShuffleParams::create(n, r, s);
  const Rational d(BigInt::binomial(r, r - s) * BigInt::binomial(n - r, s), BigInt(1));
  RMat m = rm_zero(r + 1, r + 1);
  for (unsigned x = 0; x <= r; ++x)
    for (unsigned z = 0; z <= r; ++z) {
      BigInt count(0);
      for (unsigned i = 0; i <= z; ++i) {
        unsigned j = z - i;
        if (i > x || j > r - x || s < j) continue;
        if (r < s + i) continue;
        count += BigInt::binomial(x, i) * BigInt::binomial(r - x, r - s - i) *
                 BigInt::binomial(r - x, j) * BigInt::binomial(n - 2 * r + x, s - j);
      }
      m[x][z] = Rational(count, BigInt(1)) / d;
    }
  return RationalChain::create(type_labels(r), std::move(m));
}

IntervalWeight IntervalWeight::create(unsigned r, RMat values) {
  if (values.size() != r + 1)
    throw DimensionError("interval weight needs r+1 rows");
  for (auto& row : values) {
    if (row.size() != r + 1) throw DimensionError("interval weight needs r+1 columns");
    for (const auto& v : row)
      if (v.signum() < 0) throw InvalidParameterError("interval weights must be >= 0");
  }
  return IntervalWeight{r, std::move(values)};
}

IntervalWeight epsilon_bar(unsigned a, unsigned b, unsigned r) {
  if (a < r)
    throw InvalidParameterError("epsilon-bar requires a >= r; got a = " + std::to_string(a) +
                                ", r = " + std::to_string(r));
  RMat values = rm_zero(r + 1, r + 1);
  for (unsigned x = 0; x <= r; ++x)
    for (unsigned y = x; y <= r; ++y)
      values[x][y] =
          Rational(BigInt::binomial(a, r - y) * BigInt::binomial(b, y - x), BigInt(1));
  return IntervalWeight::create(r, std::move(values));
}

RationalChain involutory_walk(const IntervalWeight& gamma) {
  const unsigned r = gamma.r;
  RMat m = rm_zero(r + 1, r + 1);
  for (unsigned x = 0; x <= r; ++x) {
    Rational norm(0);
    for (unsigned y = x; y <= r; ++y) norm += gamma.values[x][y];
    if (norm.signum() <= 0)
      throw InvalidParameterError("involutory walk ill-defined: no positive weight above x = " +
                                  std::to_string(x));
    for (unsigned y = x; y <= r; ++y) m[x][r - y] = gamma.values[x][y] / norm;
  }
  return RationalChain::create(type_labels(r), std::move(m));
}

SpectrumPrediction predicted_spectrum(unsigned n, unsigned r) {
  ShuffleParams::create(n, r);
  std::vector<Rational> eigenvalues;
  for (unsigned i = 0; i <= r; ++i) {
    unsigned x = r - i;
    Rational v(BigInt::binomial(r, x), BigInt::binomial(n - r, r - x));
    if ((r - x) % 2 == 1) v = -v;
    eigenvalues.push_back(v);
  }
  Rational normalizer(BigInt::binomial(n, r), BigInt(1));
  RVec pi(r + 1);
  for (unsigned x = 0; x <= r; ++x)
    pi[x] = Rational(BigInt::binomial(r, x) * BigInt::binomial(n - r, r - x), BigInt(1)) /
            normalizer;
  return SpectrumPrediction{std::move(eigenvalues), Distribution::create(std::move(pi)),
                            std::move(normalizer)};
}

AntidiagonalResult check_antidiagonal_property(const RationalChain& chain) {
  const std::size_t size = chain.size();
  if (size == 0) return {false, {}};
  const unsigned r = static_cast<unsigned>(size - 1);
  bool holds = true;
  for (unsigned i = 0; i <= r && holds; ++i)
    for (unsigned j = 0; j <= r; ++j)
      if (i + j > r && !chain.matrix[i][j].is_zero()) {
        holds = false;
        break;
      }
  // Anti-diagonal values read in the bottom-right-origin display layout, so with
  // the up-step orientation the j-th eigenvalue is (-1)^j A[r-j][j]; for the
  // skewed family this lists the spectrum leading-1 first.
  std::vector<Rational> eigenvalues;
  for (unsigned j = 0; j <= r; ++j) {
    Rational v = chain.matrix[r - j][j];
    if (j % 2 == 1) v = -v;
    eigenvalues.push_back(v);
  }
  if (holds)
    for (const auto& v : eigenvalues)
      if (!verify_eigenvalue(chain, v)) {
        holds = false;
        break;
      }
  return {holds, std::move(eigenvalues)};
}

std::vector<Rational> binomial_mixture_weights(unsigned r) {
  std::vector<Rational> w;
  for (unsigned s = 0; s <= r; ++s) w.emplace_back(BigInt::binomial(r, s), BigInt(1));
  return w;
}

RationalChain mixture_matrix(unsigned n, unsigned r, const std::vector<Rational>& weights) {
  if (weights.size() != r + 1)
    throw DimensionError("mixture needs one weight per type 0..r");
  Rational total(0);
  for (const auto& w : weights) {
    if (w.signum() < 0) throw InvalidParameterError("mixture weights must be >= 0");
    total += w;
  }
  if (total.is_zero()) throw InvalidParameterError("mixture weights must not all be zero");
  RMat m = rm_zero(r + 1, r + 1);
  for (unsigned s = 0; s <= r; ++s) {
    if (weights[s].is_zero()) continue;
    RationalChain qs = type_s_matrix(n, r, s);
    Rational f = weights[s] / total;
    for (unsigned x = 0; x <= r; ++x)
      for (unsigned z = 0; z <= r; ++z) m[x][z] += f * qs.matrix[x][z];
  }
  return RationalChain::create(type_labels(r), std::move(m));
}

std::vector<std::vector<Rational>> simultaneous_spectra(unsigned n, unsigned r) {
  std::vector<RMat> q;
  for (unsigned s = 0; s <= r; ++s) q.push_back(type_s_matrix(n, r, s).matrix);
  for (unsigned s = 0; s <= r; ++s)
    for (unsigned t = s + 1; t <= r; ++t)
      if (!rm_equal(rm_mul(q[s], q[t]), rm_mul(q[t], q[s])))
        throw Error("type-" + std::to_string(s) + " and type-" + std::to_string(t) +
                    " matrices do not commute; the derived type-s formula is wrong");

  // Eigenbasis of Q_r (row vectors, distinct eigenvalues), in the spectrum's
  // display order x = r..0.
  SpectrumPrediction prediction = predicted_spectrum(n, r);
  RMat qr_t = rm_transpose(q[r]);
  std::vector<RVec> basis;
  for (const auto& lambda : prediction.eigenvalues) {
    RMat m = qr_t;
    for (unsigned d = 0; d <= r; ++d) m[d][d] -= lambda;
    std::vector<RVec> space = rm_null_space(m);
    if (space.size() != 1)
      throw Error("eigenvalue " + lambda.to_string() + " of the skewed matrix is not simple");
    basis.push_back(std::move(space[0]));
  }
  std::vector<std::vector<Rational>> result(r + 1);
  for (unsigned s = 0; s <= r; ++s) {
    for (const auto& v : basis) {
      RVec w = rv_mat_mul(v, q[s]);
      std::size_t d = 0;
      while (d < v.size() && v[d].is_zero()) ++d;
      Rational mu = w[d] / v[d];
      for (std::size_t e = 0; e < v.size(); ++e)
        if (w[e] != mu * v[e])
          throw Error("simultaneous eigenbasis failed for type " + std::to_string(s));
      result[s].push_back(std::move(mu));
    }
  }
  return result;
}

}  // namespace cosetwalk

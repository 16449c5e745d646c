#include "cosetwalk/matrix.hpp"

#include <algorithm>

#include "cosetwalk/error.hpp"

namespace cosetwalk {

RMat rm_identity(std::size_t n) {
  RMat m(n, RVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

RMat rm_zero(std::size_t rows, std::size_t cols) {
  return RMat(rows, RVec(cols, Rational(0)));
}

RMat rm_transpose(const RMat& a) {
  if (a.empty()) return {};
  RMat t(a[0].size(), RVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RMat rm_mul(const RMat& a, const RMat& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw DimensionError("matrix product shape mismatch");
  RMat r = rm_zero(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  return r;
}

RVec rv_mat_mul(const RVec& v, const RMat& a) {
  if (v.size() != a.size()) throw DimensionError("vector-matrix shape mismatch");
  RVec r(a.empty() ? 0 : a[0].size(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (a[i][j].is_zero()) continue;
      r[j] += v[i] * a[i][j];
    }
  }
  return r;
}

RMat rm_scale(const RMat& a, const Rational& c) {
  RMat r = a;
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

RMat rm_add(const RMat& a, const RMat& b) {
  if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
    throw DimensionError("matrix sum shape mismatch");
  RMat r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

bool rm_equal(const RMat& a, const RMat& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Rational rm_det(const RMat& a) {
  const std::size_t n = a.size();
  if (n == 0) return Rational(1);
  for (const auto& row : a)
    if (row.size() != n) throw DimensionError("determinant requires a square matrix");
  // Clear denominators row by row; track the scale factor.
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  BigInt scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l(1);
    for (const auto& x : a[i]) l = BigInt::lcm(l, x.den());
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j].num() * (l / a[i][j].den());
    scale *= l;
  }
  // Bareiss fraction-free elimination.
  int sign = 1;
  BigInt prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Rational(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;  // exact
      m[i][k] = BigInt(0);
    }
    prev = m[k][k];
  }
  BigInt det = m[n - 1][n - 1];
  if (sign < 0) det = det.negate();
  return Rational(det, scale);
}

namespace {

// In-place Gauss-Jordan reduction to RREF; returns pivot columns.
std::vector<std::size_t> gauss_jordan(RMat& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[row], m[p]);
    Rational inv = Rational(1) / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<RVec> rm_null_space(const RMat& a) {
  if (a.empty()) return {};
  RMat m = a;
  const std::size_t cols = m[0].size();
  std::vector<std::size_t> pivots = gauss_jordan(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RVec> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RVec v(cols, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVec> rm_solve_unique(const RMat& a, const RVec& b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) throw DimensionError("solve: rhs length mismatch");
  if (rows == 0) return RVec{};
  const std::size_t cols = a[0].size();
  RMat m(rows, RVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }
  std::vector<std::size_t> pivots = gauss_jordan(m);
  // Inconsistent if some pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  if (pivots.size() != cols) return std::nullopt;  // underdetermined
  RVec x(cols);
  for (std::size_t k = 0; k < cols; ++k) x[k] = m[k][cols];
  return x;
}

std::vector<Rational> rm_char_poly(const RMat& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DimensionError("char_poly requires a square matrix");
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  RMat m = rm_zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    m = rm_mul(a, m);
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    RMat am = rm_mul(a, m);
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -(tr / Rational(static_cast<long long>(k)));
  }
  return c;
}

Rational poly_eval(const std::vector<Rational>& p, const Rational& x) {
  Rational r(0);
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

std::vector<Rational> poly_divide_linear(const std::vector<Rational>& p,
                                         const Rational& root) {
  if (p.size() < 2) throw DimensionError("cannot divide a constant polynomial");
  std::vector<Rational> q(p.size() - 1);
  Rational carry = p.back();
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = p[i] + carry * root;
  }
  if (!carry.is_zero()) throw Error("polynomial not divisible by (x - " + root.to_string() + ")");
  return q;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& p,
                               const std::vector<Rational>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<Rational> r(p.size() + q.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

namespace {

// Divisors of |v|, or nullopt when v has a prime factor structure we cannot
// certify by trial division (bounded at 10^6).
std::optional<std::vector<BigInt>> divisors_of(const BigInt& v) {
  BigInt n = v.abs();
  if (n.is_zero()) return std::nullopt;
  std::vector<std::pair<BigInt, unsigned>> factors;
  for (long long p = 2; p <= 1000000; p += (p == 2 ? 1 : 2)) {
    BigInt bp(p);
    if (bp * bp > n) break;
    unsigned e = 0;
    while ((n % bp).is_zero()) {
      n /= bp;
      ++e;
    }
    if (e > 0) factors.emplace_back(bp, e);
  }
  if (!n.is_one()) {
    // Remainder is prime iff it has no factor <= 10^6; beyond 10^12 we
    // cannot certify primality here, so give up.
    if (n > BigInt(1000000000000ll)) return std::nullopt;
    factors.emplace_back(n, 1);
  }
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [p, e] : factors) {
    std::size_t base = divs.size();
    BigInt pk(1);
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > 100000) return std::nullopt;
      }
    }
  }
  return divs;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots_complete(std::vector<Rational> monic) {
  if (monic.empty() || !monic.back().is_one()) throw Error("expected a monic polynomial");
  std::vector<Rational> roots;
  // Strip zero roots.
  while (monic.size() > 1 && monic.front().is_zero()) {
    roots.push_back(Rational(0));
    monic.erase(monic.begin());
  }
  while (monic.size() > 1) {
    // Scale to an integer polynomial.
    BigInt l(1);
    for (const auto& c : monic) l = BigInt::lcm(l, c.den());
    BigInt a0 = monic.front().num() * (l / monic.front().den());
    BigInt an = monic.back().num() * (l / monic.back().den());
    auto num_divs = divisors_of(a0);
    auto den_divs = divisors_of(an);
    if (!num_divs || !den_divs) return std::nullopt;
    bool found = false;
    for (const auto& p : *num_divs) {
      for (const auto& q : *den_divs) {
        for (int sign : {1, -1}) {
          Rational cand(sign > 0 ? p : p.negate(), q);
          if (poly_eval(monic, cand).is_zero()) {
            roots.push_back(cand);
            monic = poly_divide_linear(monic, cand);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;  // no further rational roots
    // Re-strip zeros exposed by division.
    while (monic.size() > 1 && monic.front().is_zero()) {
      roots.push_back(Rational(0));
      monic.erase(monic.begin());
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) {
    return a > b;
  });
  return roots;
}

}  // namespace cosetwalk

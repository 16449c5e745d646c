#include "cosetwalk/bigint.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "cosetwalk/error.hpp"

namespace cosetwalk {

namespace {

constexpr std::uint64_t kLimbBase = 1ull << 32;

// Unsigned absolute value of an int64, safe for INT64_MIN.
std::uint64_t uabs64(long long v) {
  return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

}  // namespace

BigInt::BigInt(unsigned long long v) {
  if (v <= static_cast<unsigned long long>(INT64_MAX)) {
    small_ = static_cast<long long>(v);
  } else {
    Mag mag;
    mag.push_back(static_cast<std::uint32_t>(v));
    mag.push_back(static_cast<std::uint32_t>(v >> 32));
    *this = make_big(1, std::move(mag));
  }
}

BigInt BigInt::make_big(int sign, Mag mag) {
  while (!mag.empty() && mag.back() == 0) mag.pop_back();
  BigInt r;
  if (mag.empty()) return r;
  // Collapse to the small representation when the value fits in int64.
  if (mag.size() <= 2) {
    std::uint64_t m = mag[0];
    if (mag.size() == 2) m |= static_cast<std::uint64_t>(mag[1]) << 32;
    if (sign > 0 && m <= static_cast<std::uint64_t>(INT64_MAX)) {
      r.small_ = static_cast<long long>(m);
      return r;
    }
    if (sign < 0 && m <= uabs64(INT64_MIN)) {
      r.small_ = (m == uabs64(INT64_MIN)) ? INT64_MIN : -static_cast<long long>(m);
      return r;
    }
  }
  r.big_sign_ = sign;
  r.big_ = std::make_shared<const Mag>(std::move(mag));
  return r;
}

BigInt BigInt::from_i128(__int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return BigInt(static_cast<long long>(v));
  int sign = v < 0 ? -1 : 1;
  unsigned __int128 m = v < 0 ? ~static_cast<unsigned __int128>(v) + 1
                              : static_cast<unsigned __int128>(v);
  Mag mag;
  while (m != 0) {
    mag.push_back(static_cast<std::uint32_t>(m));
    m >>= 32;
  }
  return make_big(sign, std::move(mag));
}

BigInt::Mag BigInt::magnitude() const {
  if (big_) return *big_;
  Mag mag;
  std::uint64_t m = uabs64(small_);
  while (m != 0) {
    mag.push_back(static_cast<std::uint32_t>(m));
    m >>= 32;
  }
  return mag;
}

int BigInt::signum() const {
  if (big_) return big_sign_;
  return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
}

BigInt BigInt::abs() const {
  if (!big_) {
    if (small_ == INT64_MIN) return make_big(1, magnitude());
    return BigInt(small_ < 0 ? -small_ : small_);
  }
  return make_big(1, *big_);
}

BigInt BigInt::negate() const {
  if (!big_) {
    if (small_ == INT64_MIN) return make_big(1, magnitude());
    return BigInt(-small_);
  }
  return make_big(-big_sign_, *big_);
}

long long BigInt::to_int64() const {
  if (!big_) return small_;
  throw Error("BigInt does not fit in int64: " + to_string());
}

double BigInt::to_double() const {
  if (!big_) return static_cast<double>(small_);
  double r = 0;
  for (auto it = big_->rbegin(); it != big_->rend(); ++it)
    r = r * static_cast<double>(kLimbBase) + static_cast<double>(*it);
  return big_sign_ < 0 ? -r : r;
}

int BigInt::cmp_mag(const Mag& a, const Mag& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

BigInt::Mag BigInt::add_mag(const Mag& a, const Mag& b) {
  const Mag& lo = a.size() < b.size() ? a : b;
  const Mag& hi = a.size() < b.size() ? b : a;
  Mag r(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    r[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  r[hi.size()] = static_cast<std::uint32_t>(carry);
  return r;
}

BigInt::Mag BigInt::sub_mag(const Mag& a, const Mag& b) {
  Mag r(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kLimbBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(d);
  }
  return r;
}

BigInt::Mag BigInt::mul_mag(const Mag& a, const Mag& b) {
  if (a.empty() || b.empty()) return {};
  Mag r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = r[i + j] + ai * b[j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry != 0) {
      std::uint64_t cur = r[k] + carry;
      r[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  return r;
}

std::size_t BigInt::bit_length(const Mag& a) {
  if (a.empty()) return 0;
  std::uint32_t top = a.back();
  std::size_t bits = (a.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigInt::bit_at(const Mag& a, std::size_t i) {
  std::size_t limb = i / 32;
  if (limb >= a.size()) return false;
  return (a[limb] >> (i % 32)) & 1u;
}

BigInt::Mag BigInt::shl_mag(const Mag& a, std::size_t bits) {
  if (a.empty()) return {};
  std::size_t limbshift = bits / 32, inner = bits % 32;
  Mag r(a.size() + limbshift + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(a[i]) << inner;
    r[i + limbshift] |= static_cast<std::uint32_t>(v);
    r[i + limbshift + 1] |= static_cast<std::uint32_t>(v >> 32);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Shift-subtract long division on magnitudes. Quadratic, but division of
// genuinely large values is rare in this codebase.
void BigInt::divmod_mag(const Mag& a, const Mag& b, Mag& q, Mag& r) {
  if (b.empty()) throw Error("division by zero");
  q.assign(a.size(), 0);
  r.clear();
  if (cmp_mag(a, b) < 0) {
    r = a;
    q.clear();
    return;
  }
  // Fast path: single-limb divisor.
  if (b.size() == 1) {
    std::uint64_t d = b[0];
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem != 0) r.push_back(static_cast<std::uint32_t>(rem));
    if (rem >> 32) r.push_back(static_cast<std::uint32_t>(rem >> 32));
    return;
  }
  std::size_t abits = bit_length(a), bbits = bit_length(b);
  Mag rem;
  for (std::size_t i = abits; i-- > 0;) {
    // rem = rem*2 + bit, clamped against the divisor
    rem = shl_mag(rem, 1);
    if (bit_at(a, i)) {
      if (rem.empty()) rem.push_back(1);
      else {
        std::size_t k = 0;
        while (true) {
          if (k == rem.size()) { rem.push_back(1); break; }
          if (++rem[k] != 0) break;
          ++k;
        }
      }
    }
    if (cmp_mag(rem, b) >= 0) {
      rem = sub_mag(rem, b);
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      q[i / 32] |= (1u << (i % 32));
    }
  }
  (void)bbits;
  while (!q.empty() && q.back() == 0) q.pop_back();
  r = std::move(rem);
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.is_small() && b.is_small()) {
    __int128 s = static_cast<__int128>(a.small_) + b.small_;
    return BigInt::from_i128(s);
  }
  int sa = a.signum(), sb = b.signum();
  if (sa == 0) return b;
  if (sb == 0) return a;
  BigInt::Mag ma = a.magnitude(), mb = b.magnitude();
  if (sa == sb) return BigInt::make_big(sa, BigInt::add_mag(ma, mb));
  int c = BigInt::cmp_mag(ma, mb);
  if (c == 0) return BigInt(0);
  if (c > 0) return BigInt::make_big(sa, BigInt::sub_mag(ma, mb));
  return BigInt::make_big(sb, BigInt::sub_mag(mb, ma));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negate(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_small() && b.is_small()) {
    __int128 p = static_cast<__int128>(a.small_) * b.small_;
    return BigInt::from_i128(p);
  }
  int s = a.signum() * b.signum();
  if (s == 0) return BigInt(0);
  return BigInt::make_big(s, BigInt::mul_mag(a.magnitude(), b.magnitude()));
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw Error("division by zero");
  if (a.is_small() && b.is_small()) {
    if (!(a.small_ == INT64_MIN && b.small_ == -1)) {
      q = BigInt(a.small_ / b.small_);
      r = BigInt(a.small_ % b.small_);
      return;
    }
  }
  Mag mq, mr;
  divmod_mag(a.magnitude(), b.magnitude(), mq, mr);
  const int qsign = mq.empty() ? 0 : a.signum() * b.signum();
  const int rsign = mr.empty() ? 0 : a.signum();
  q = make_big(qsign, std::move(mq));
  r = make_big(rsign, std::move(mr));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  if (a.is_small() && b.is_small()) return a.small_ == b.small_;
  if (a.signum() != b.signum()) return false;
  if (a.is_small() != b.is_small()) return false;  // both canonical
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.is_small() && b.is_small()) return a.small_ <=> b.small_;
  int sa = a.signum(), sb = b.signum();
  if (sa != sb) return sa <=> sb;
  // same sign, at least one big
  BigInt::Mag ma = a.magnitude(), mb = b.magnitude();
  int c = BigInt::cmp_mag(ma, mb);
  if (sa < 0) c = -c;
  return c <=> 0;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  if (a.is_small() && b.is_small()) {
    std::uint64_t g = std::gcd(uabs64(a.small_), uabs64(b.small_));
    return BigInt(static_cast<unsigned long long>(g));
  }
  // Binary GCD on magnitudes; no division needed.
  Mag x = a.magnitude(), y = b.magnitude();
  if (x.empty()) {
    const int ysign = y.empty() ? 0 : 1;
    return make_big(ysign, std::move(y));
  }
  if (y.empty()) return make_big(1, std::move(x));
  auto trailing_zeros = [](const Mag& m) {
    std::size_t tz = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) { tz += 32; continue; }
      tz += static_cast<std::size_t>(__builtin_ctz(m[i]));
      break;
    }
    return tz;
  };
  auto shr = [](Mag m, std::size_t bits) {
    std::size_t limbshift = bits / 32, inner = bits % 32;
    if (limbshift >= m.size()) return Mag{};
    Mag r(m.size() - limbshift, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t v = m[i + limbshift];
      if (inner != 0) {
        v >>= inner;
        if (i + limbshift + 1 < m.size())
          v |= static_cast<std::uint64_t>(m[i + limbshift + 1]) << (32 - inner);
      }
      r[i] = static_cast<std::uint32_t>(v);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  };
  std::size_t shift = std::min(trailing_zeros(x), trailing_zeros(y));
  x = shr(std::move(x), trailing_zeros(x));
  while (!y.empty()) {
    y = shr(std::move(y), trailing_zeros(y));
    if (cmp_mag(x, y) > 0) std::swap(x, y);
    y = sub_mag(y, x);
    while (!y.empty() && y.back() == 0) y.pop_back();
  }
  return make_big(1, shl_mag(x, shift));
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt(0);
  return (a / gcd(a, b) * b).abs();
}

BigInt BigInt::pow(const BigInt& base, unsigned long exp) {
  BigInt result(1), b = base;
  while (exp != 0) {
    if (exp & 1ul) result *= b;
    exp >>= 1;
    if (exp != 0) b *= b;
  }
  return result;
}

BigInt BigInt::pow10(unsigned long exp) { return pow(BigInt(10), exp); }

BigInt BigInt::factorial(unsigned long n) {
  BigInt r(1);
  for (unsigned long i = 2; i <= n; ++i) r *= BigInt(static_cast<long long>(i));
  return r;
}

BigInt BigInt::binomial(unsigned long n, unsigned long k) {
  if (k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (unsigned long i = 1; i <= k; ++i) {
    r *= BigInt(static_cast<long long>(n - k + i));
    r /= BigInt(static_cast<long long>(i));  // exact at every step
  }
  return r;
}

BigInt BigInt::isqrt_floor(const BigInt& v) {
  if (v.signum() < 0) throw Error("isqrt of negative value");
  if (v.is_zero()) return BigInt(0);
  if (v.is_small() && v.small_ <= (1ll << 52)) {
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(v.small_)));
    while (s * s > v.small_) --s;
    while ((s + 1) * (s + 1) <= v.small_) ++s;
    return BigInt(s);
  }
  // Newton iteration starting above the root.
  std::size_t bits = bit_length(v.magnitude());
  BigInt x = pow(BigInt(2), static_cast<unsigned long>(bits / 2 + 1));
  while (true) {
    BigInt y = (x + v / x) / BigInt(2);
    if (y >= x) break;
    x = y;
  }
  return x;
}

BigInt BigInt::isqrt_ceil(const BigInt& v) {
  BigInt f = isqrt_floor(v);
  if (f * f == v) return f;
  return f + BigInt(1);
}

BigInt BigInt::from_string(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  bool neg = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw ParseError("invalid integer literal");
  BigInt r(0);
  const BigInt chunk_scale(1000000000ll);
  long long chunk = 0;
  int chunk_len = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw ParseError(std::string("invalid digit in integer literal: ") + c);
    chunk = chunk * 10 + (c - '0');
    if (++chunk_len == 9) {
      r = r * chunk_scale + BigInt(chunk);
      chunk = 0;
      chunk_len = 0;
    }
  }
  if (chunk_len > 0) {
    long long scale = 1;
    for (int k = 0; k < chunk_len; ++k) scale *= 10;
    r = r * BigInt(scale) + BigInt(chunk);
  }
  return neg ? r.negate() : r;
}

std::string BigInt::to_string() const {
  if (is_small()) return std::to_string(small_);
  Mag m = *big_;
  std::string out;
  while (!m.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int k = 0; k < 9; ++k) {
      out.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  if (big_sign_ < 0) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t BigInt::hash() const {
  if (is_small()) return std::hash<long long>{}(small_);
  std::size_t h = big_sign_ < 0 ? 0x9e3779b97f4a7c15ull : 0x517cc1b727220a95ull;
  for (std::uint32_t limb : *big_) h = h * 1099511628211ull ^ limb;
  return h;
}

}  // namespace cosetwalk

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cosetwalk {

/// Arbitrary-precision signed integer.
///
/// Values that fit in int64 are stored inline; larger magnitudes live in a
/// shared, immutable limb vector (base 2^32, little-endian), so copies are
/// cheap. Every operation returns a canonicalized value: the big
/// representation is only used when the value does not fit in int64.
class BigInt {
 public:
  BigInt() : small_(0) {}
  BigInt(long long v) : small_(v) {}  // NOLINT: implicit by design
  BigInt(long v) : small_(v) {}       // NOLINT
  BigInt(int v) : small_(v) {}        // NOLINT
  BigInt(unsigned v) : small_(v) {}   // NOLINT
  BigInt(unsigned long long v);
  BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}  // NOLINT

  static BigInt from_string(std::string_view text);
  std::string to_string() const;

  bool is_small() const { return big_ == nullptr; }
  bool fits_int64() const { return big_ == nullptr; }
  /// Value as int64; throws Error when it does not fit.
  long long to_int64() const;
  double to_double() const;

  int signum() const;
  bool is_zero() const { return big_ == nullptr && small_ == 0; }
  bool is_one() const { return big_ == nullptr && small_ == 1; }
  BigInt abs() const;
  BigInt negate() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  /// Quotient truncated toward zero; throws on division by zero.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  /// Remainder with the sign of the dividend (C++ convention).
  friend BigInt operator%(const BigInt& a, const BigInt& b);
  BigInt operator-() const { return negate(); }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
  BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

  friend bool operator==(const BigInt& a, const BigInt& b);
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  /// Quotient and remainder in one pass (remainder sign follows dividend).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  static BigInt gcd(const BigInt& a, const BigInt& b);
  static BigInt lcm(const BigInt& a, const BigInt& b);
  static BigInt pow(const BigInt& base, unsigned long exp);
  static BigInt pow10(unsigned long exp);
  static BigInt factorial(unsigned long n);
  /// C(n, k); zero when k > n.
  static BigInt binomial(unsigned long n, unsigned long k);
  /// Largest s with s*s <= v; requires v >= 0.
  static BigInt isqrt_floor(const BigInt& v);
  /// Smallest s with s*s >= v; requires v >= 0.
  static BigInt isqrt_ceil(const BigInt& v);

  std::size_t hash() const;

 private:
  using Mag = std::vector<std::uint32_t>;  // little-endian, no leading zeros

  static BigInt from_i128(__int128 v);
  static BigInt make_big(int sign, Mag mag);
  // Magnitude of *this as limbs (works for both representations).
  Mag magnitude() const;
  int sign() const { return signum(); }

  static int cmp_mag(const Mag& a, const Mag& b);
  static Mag add_mag(const Mag& a, const Mag& b);
  static Mag sub_mag(const Mag& a, const Mag& b);  // requires a >= b
  static Mag mul_mag(const Mag& a, const Mag& b);
  static void divmod_mag(const Mag& a, const Mag& b, Mag& q, Mag& r);
  static Mag shl_mag(const Mag& a, std::size_t bits);
  static std::size_t bit_length(const Mag& a);
  static bool bit_at(const Mag& a, std::size_t i);

  long long small_ = 0;               // valid iff big_ == nullptr
  int big_sign_ = 0;                  // -1 or +1 when big_ is set
  std::shared_ptr<const Mag> big_;    // null for the small representation
};

inline BigInt abs(const BigInt& v) { return v.abs(); }

}  // namespace cosetwalk

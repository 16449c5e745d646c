#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "cosetwalk/bigint.hpp"

namespace cosetwalk {

/// Exact rational number, always reduced, denominator always positive.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(int v) : num_(v), den_(1) {}        // NOLINT
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den);

  /// Parses "p/q" or "p" (optional sign, decimal digits).
  static Rational parse(std::string_view text);
  /// Renders "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int signum() const { return num_.signum(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }
  Rational abs() const;
  double to_double() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// b^exp for integer exp (negative allowed when base is nonzero).
  static Rational pow(const Rational& base, long exp);
  static Rational binomial(unsigned long n, unsigned long k) {
    return Rational(BigInt::binomial(n, k), BigInt(1));
  }

  std::size_t hash() const;

 private:
  BigInt num_, den_;
};

}  // namespace cosetwalk

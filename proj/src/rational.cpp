#include "cosetwalk/rational.hpp"

#include "cosetwalk/error.hpp"

namespace cosetwalk {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational with zero denominator");
  if (den_.signum() < 0) {
    num_ = num_.negate();
    den_ = den_.negate();
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(text), BigInt(1));
  return Rational(BigInt::from_string(text.substr(0, slash)),
                  BigInt::from_string(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.num_.signum() < 0) r.num_ = r.num_.negate();
  return r;
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error("division by zero rational");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = r.num_.negate();
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational Rational::pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (base.is_zero()) throw Error("zero to a negative power");
    return Rational(BigInt::pow(base.den_, static_cast<unsigned long>(-exp)),
                    BigInt::pow(base.num_, static_cast<unsigned long>(-exp)));
  }
  return Rational(BigInt::pow(base.num_, static_cast<unsigned long>(exp)),
                  BigInt::pow(base.den_, static_cast<unsigned long>(exp)));
}

std::size_t Rational::hash() const {
  return num_.hash() * 1099511628211ull ^ den_.hash();
}

}  // namespace cosetwalk

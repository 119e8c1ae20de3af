#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace romscarf {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number. Always stored reduced (gcd 1) with a
/// positive denominator; the canonical zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = Rep(num);
    v_ /= Rep(den);
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Accepts "7", "-21/2" and plain decimals like "2.5".
  static Rational parse(const std::string& text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

  /// Largest integer <= value.
  BigInt floor() const;

  double to_double() const { return v_.convert_to<double>(); }
  std::string str() const;

  Rational operator-() const { return Rational(Rep(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  using Rep = boost::multiprecision::cpp_rational;
  explicit Rational(Rep v) : v_(std::move(v)) {}
  Rep v_;
};

/// x^k for integer k (k < 0 inverts; 0^0 = 1).
Rational pow(const Rational& x, int k);

/// Exact square root when the argument is a perfect rational square.
std::optional<Rational> rational_sqrt(const Rational& x);

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace romscarf

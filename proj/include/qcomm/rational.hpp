#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcomm {

/// Thrown when an exact integer computation leaves the 64-bit range.
class OverflowError : public std::overflow_error {
 public:
  OverflowError() : std::overflow_error("rational arithmetic overflow") {}
  explicit OverflowError(const std::string& msg) : std::overflow_error(msg) {}
};

/// Thrown on division by zero or inversion of zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact rational number with 64-bit numerator and denominator.
/// Always stored in lowest terms with a positive denominator.
/// Intermediate products use 128-bit arithmetic and throw OverflowError
/// if a reduced result does not fit.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DivisionByZero();
    __int128 nn = n, dd = d;
    if (dd < 0) { nn = -nn; dd = -dd; }
    normalize(nn, dd);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  bool negative() const { return num_ < 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return Rational(n, d, raw_tag{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return Rational(n, d, raw_tag{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.num_;
    __int128 d = (__int128)a.den_ * b.den_;
    return Rational(n, d, raw_tag{});
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DivisionByZero();
    __int128 n = (__int128)a.num_ * b.den_;
    __int128 d = (__int128)a.den_ * b.num_;
    return Rational(n, d, raw_tag{});
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational inv() const {
    if (num_ == 0) throw DivisionByZero();
    return Rational(den_, num_);
  }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  struct raw_tag {};
  Rational(__int128 n, __int128 d, raw_tag) {
    if (d < 0) { n = -n; d = -d; }
    normalize(n, d);
  }
  void normalize(__int128 n, __int128 d) {
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd128(an, d);
    n /= g;
    d /= g;
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw OverflowError();
    num_ = (std::int64_t)n;
    den_ = (std::int64_t)d;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace qcomm

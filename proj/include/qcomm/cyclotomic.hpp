#pragma once

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "qcomm/rational.hpp"

namespace qcomm {

/// The cyclotomic field Q(q) with q a primitive N-th root of unity, N odd.
/// Elements are polynomials in q reduced modulo the N-th cyclotomic
/// polynomial. Instances are interned per order and live for the whole
/// process, so scalars can hold plain pointers to their field.
class CycloField {
 public:
  /// Interned field of the given odd order N >= 3.
  static const CycloField& of_order(int n);

  int order() const { return n_; }
  int degree() const { return (int)phi_.size() - 1; }
  /// Monic modulus, coefficient of x^i at index i, size degree()+1.
  const std::vector<Rational>& modulus() const { return phi_; }

  CycloField(const CycloField&) = delete;
  CycloField& operator=(const CycloField&) = delete;

 private:
  explicit CycloField(int n);
  int n_;
  std::vector<Rational> phi_;
};

/// Element of Q(q). A Scalar is either bound to a CycloField (coefficient
/// vector of length degree) or an unbound rational constant, which lets
/// integer literals combine with any field's elements. Mixing scalars
/// bound to different fields is a logic error.
class Scalar {
 public:
  Scalar() : field_(nullptr) { coeffs_.push_back(Rational(0)); }
  Scalar(std::int64_t n) : field_(nullptr) { coeffs_.push_back(Rational(n)); }
  Scalar(int n) : Scalar((std::int64_t)n) {}
  Scalar(const Rational& r) : field_(nullptr) { coeffs_.push_back(r); }
  /// Bound value from polynomial coefficients (any length, gets reduced).
  Scalar(const CycloField& f, std::vector<Rational> coeffs);

  /// q^k in the given field, k arbitrary (reduced mod N).
  static Scalar q(const CycloField& f, long k = 1);

  const CycloField* field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Coefficient of q^i; i < degree for bound values, i == 0 otherwise.
  const Rational& coeff(int i) const { return coeffs_[i]; }
  int coeff_count() const { return (int)coeffs_.size(); }

  /// Same value bound to f; no-op if already bound.
  Scalar bind(const CycloField& f) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Scalar inv() const;
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

  /// Image under q -> q^(N-1) = q^(-1), complex conjugation in the
  /// standard embedding. Identity on rational constants.
  Scalar conj() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Common-denominator form: positive denominator and one integer
  /// numerator per coefficient.
  struct LcdForm {
    std::int64_t den;
    boost::container::small_vector<std::int64_t, 2> nums;
  };
  LcdForm lcd_form() const;

  /// Debug form "c0 + c1 q + ...". Canonical pretty printing lives in
  /// printing.hpp.
  std::string raw_str() const;

 private:
  using Coeffs = boost::container::small_vector<Rational, 2>;
  const CycloField* field_;
  Coeffs coeffs_;

  void reduce();
  static void align(Scalar& a, Scalar& b);
};

/// q^k as a free function, matching the scalar-building vocabulary.
inline Scalar q_pow(const CycloField& f, long k) { return Scalar::q(f, k); }

}  // namespace qcomm

#include "qcomm/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qcomm {

namespace {

using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact quotient of a by b; remainder must vanish.
Poly poly_div_exact(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
    if (a.empty()) break;
  }
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  poly_trim(q);
  return q;
}

// Cyclotomic polynomial of order n: divide x^n - 1 by the cyclotomic
// polynomials of all proper divisors.
Poly cyclotomic_poly(int n) {
  Poly p(n + 1, Rational(0));
  p[0] = Rational(-1);
  p[n] = Rational(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = poly_div_exact(std::move(p), cyclotomic_poly(d));
  }
  return p;
}

}  // namespace

CycloField::CycloField(int n) : n_(n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("order must be odd and at least 3");
  phi_ = cyclotomic_poly(n);
}

const CycloField& CycloField::of_order(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::unique_ptr<CycloField>(new CycloField(n))).first;
  }
  return *it->second;
}

Scalar::Scalar(const CycloField& f, std::vector<Rational> coeffs) : field_(&f) {
  coeffs_.assign(coeffs.begin(), coeffs.end());
  reduce();
}

Scalar Scalar::q(const CycloField& f, long k) {
  long n = f.order();
  long e = ((k % n) + n) % n;
  std::vector<Rational> c(e + 1, Rational(0));
  c[e] = Rational(1);
  return Scalar(f, std::move(c));
}

void Scalar::reduce() {
  if (!field_) return;
  const auto& phi = field_->modulus();
  int d = field_->degree();
  for (int i = (int)coeffs_.size() - 1; i >= d; --i) {
    Rational c = coeffs_[i];
    if (!c.is_zero()) {
      for (int j = 0; j < d; ++j) coeffs_[i - d + j] -= c * phi[j];
    }
    coeffs_.pop_back();
  }
  coeffs_.resize(d, Rational(0));
}

void Scalar::align(Scalar& a, Scalar& b) {
  if (a.field_ == b.field_) return;
  if (a.field_ && b.field_) throw std::logic_error("scalars from different fields");
  if (a.field_)
    b = b.bind(*a.field_);
  else
    a = a.bind(*b.field_);
}

Scalar Scalar::bind(const CycloField& f) const {
  if (field_ == &f) return *this;
  if (field_) throw std::logic_error("scalar already bound to another field");
  Scalar r;
  r.field_ = &f;
  r.coeffs_.assign((std::size_t)f.degree(), Rational(0));
  r.coeffs_[0] = coeffs_[0];
  return r;
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Scalar::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar x = a, y = b;
  Scalar::align(x, y);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar x = a, y = b;
  Scalar::align(x, y);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
  return x;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar x = a, y = b;
  Scalar::align(x, y);
  Scalar r;
  r.field_ = x.field_;
  r.coeffs_.assign(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
      r.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  r.reduce();
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (!field_) return Scalar(coeffs_[0].inv());
  // Extended Euclid in Q[x]: u * this + v * phi = gcd = constant.
  Poly r0(field_->modulus());
  Poly r1(coeffs_.begin(), coeffs_.end());
  poly_trim(r1);
  Poly s0{}, s1{Rational(1)};
  while (true) {
    // Divide r0 by r1, r0 = t * r1 + rem.
    Poly rem = r0;
    Poly t(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rational(0));
    while (rem.size() >= r1.size()) {
      Rational c = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      t[shift] += c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      poly_trim(rem);
      if (rem.empty()) break;
    }
    // s_next = s0 - t * s1
    Poly snext = s0;
    snext.resize(std::max(snext.size(), t.size() + s1.size()), Rational(0));
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].is_zero()) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) snext[i + j] -= t[i] * s1[j];
    }
    poly_trim(snext);
    if (rem.empty()) {
      // r1 is the gcd; it must be a nonzero constant since phi is
      // squarefree and this scalar is nonzero mod phi.
      if (r1.size() != 1) throw std::logic_error("scalar not invertible");
      Rational g = r1[0];
      std::vector<Rational> u(s1.begin(), s1.end());
      for (auto& c : u) c /= g;
      return Scalar(*field_, std::move(u));
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snext);
  }
}

Scalar Scalar::conj() const {
  if (!field_) return *this;
  int n = field_->order();
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    int e = (int)((i * (std::size_t)(n - 1)) % (std::size_t)n);
    c[e] += coeffs_[i];
  }
  return Scalar(*field_, std::move(c));
}

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar x = a, y = b;
  Scalar::align(x, y);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    if (x.coeffs_[i] != y.coeffs_[i]) return false;
  return true;
}

Scalar::LcdForm Scalar::lcd_form() const {
  __int128 den = 1;
  for (const auto& c : coeffs_) {
    __int128 d = c.den();
    __int128 g = d;
    __int128 a = den;
    while (a != 0) {
      __int128 t = g % a;
      g = a;
      a = t;
    }
    den = den / g * d;
    if (den > INT64_MAX) throw OverflowError();
  }
  LcdForm f;
  f.den = (std::int64_t)den;
  for (const auto& c : coeffs_) {
    __int128 n = (__int128)c.num() * (den / c.den());
    if (n > INT64_MAX || n < INT64_MIN) throw OverflowError();
    f.nums.push_back((std::int64_t)n);
  }
  return f;
}

std::string Scalar::raw_str() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!s.empty()) s += " + ";
    s += coeffs_[i].str();
    if (i == 1) s += " q";
    if (i > 1) s += " q^" + std::to_string(i);
  }
  return s;
}

}  // namespace qcomm

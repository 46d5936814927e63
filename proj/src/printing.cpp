#include "qcomm/printing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcomm {
namespace {

bool small_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  __int128 l = (__int128)(a / g) * b;
  if (l > INT64_MAX) throw OverflowError("denominator overflow while printing");
  return (std::int64_t)l;
}

// One printable q-power with an integer coefficient over a shared
// denominator.
struct Lifted {
  std::int64_t den = 1;
  std::vector<std::pair<int, std::int64_t>> terms;  // (exponent, numerator)
};

Lifted to_lifted(const std::vector<Rational>& coords) {
  Lifted out;
  for (const Rational& c : coords)
    if (!c.is_zero()) out.den = lcm64(out.den, c.den());
  for (int i = 0; i < (int)coords.size(); ++i) {
    const Rational& c = coords[i];
    if (c.is_zero()) continue;
    __int128 num = (__int128)c.num() * (out.den / c.den());
    if (num > INT64_MAX || num < INT64_MIN)
      throw OverflowError("numerator overflow while printing");
    out.terms.emplace_back(i, (std::int64_t)num);
  }
  return out;
}

std::int64_t max_abs_num(const Lifted& l) {
  std::int64_t m = 0;
  for (auto& [e, n] : l.terms) m = std::max(m, n < 0 ? -n : n);
  return m;
}

// Chooses the representative in the span of {1, q, .., q^(N-1)} with the
// fewest terms, then the smallest maximal numerator, then the smallest
// shift. Only valid for prime order, where the modulus is the all-ones
// polynomial and representatives differ by a constant shift across all N
// power slots.
Lifted best_lift(const Scalar& s) {
  const CycloField& f = *s.field();
  int n = f.order();
  int d = f.degree();
  std::vector<Rational> shifts;
  shifts.push_back(Rational(0));
  for (int i = 0; i < d; ++i) {
    Rational t = -s.coeff(i);
    if (std::find(shifts.begin(), shifts.end(), t) == shifts.end()) shifts.push_back(t);
  }
  bool have = false;
  Lifted best;
  Rational best_t;
  for (const Rational& t : shifts) {
    std::vector<Rational> v(n, t);
    for (int i = 0; i < d; ++i) v[i] = s.coeff(i) + t;
    Lifted cand = to_lifted(v);
    if (!have) {
      have = true;
      best = cand;
      best_t = t;
      continue;
    }
    if (cand.terms.size() != best.terms.size()) {
      if (cand.terms.size() < best.terms.size()) { best = cand; best_t = t; }
      continue;
    }
    std::int64_t ca = max_abs_num(cand), ba = max_abs_num(best);
    if (ca != ba) {
      if (ca < ba) { best = cand; best_t = t; }
      continue;
    }
    if (t < best_t) { best = cand; best_t = t; }
  }
  return best;
}

Lifted lift_scalar(const Scalar& s) {
  if (!s.field()) {
    std::vector<Rational> v{s.coeff(0)};
    return to_lifted(v);
  }
  if (small_prime(s.field()->order())) return best_lift(s);
  std::vector<Rational> v;
  for (int i = 0; i < s.field()->degree(); ++i) v.push_back(s.coeff(i));
  return to_lifted(v);
}

std::string power_term(int exp, std::int64_t num) {
  std::string out;
  std::int64_t a = num < 0 ? -num : num;
  if (exp == 0) return std::to_string(a);
  if (a != 1) out += std::to_string(a);
  out += "q";
  if (exp != 1) out += "^" + std::to_string(exp);
  return out;
}

// Compact sum without the denominator: positive terms ascending, then
// negative terms ascending.
std::string poly_str(const Lifted& l) {
  std::string out;
  auto emit = [&](int exp, std::int64_t num) {
    if (out.empty())
      out += (num < 0 ? "-" : "") + power_term(exp, num);
    else
      out += (num < 0 ? "-" : "+") + power_term(exp, num);
  };
  for (auto& [e, n] : l.terms)
    if (n > 0) emit(e, n);
  for (auto& [e, n] : l.terms)
    if (n < 0) emit(e, n);
  return out;
}

std::string lifted_str(const Lifted& l) {
  if (l.terms.empty()) return "0";
  std::string p = poly_str(l);
  if (l.den == 1) return p;
  if (l.terms.size() == 1) return p + "/" + std::to_string(l.den);
  return "(" + p + ")/" + std::to_string(l.den);
}

struct PrintTerm {
  int degree = 0;
  std::vector<int> tuple;
  std::uint64_t key = 0;
  const Scalar* coeff = nullptr;
};

}  // namespace

std::string print_scalar(const Scalar& s) {
  if (s.is_zero()) return "0";
  return lifted_str(lift_scalar(s));
}

bool scalar_prints_single_term(const Scalar& s) {
  if (s.is_zero()) return true;
  return lift_scalar(s).terms.size() == 1;
}

std::string print_monomial(const Algebra& a, std::uint32_t idx) {
  std::vector<int> exps = a.exponents(idx);
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += a.factor_names[i];
    if (exps[i] != 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string print_element(const Algebra& a, const Element& e) {
  if (e.is_zero()) return "0";

  std::vector<PrintTerm> terms;
  terms.reserve(e.terms.size());
  for (const auto& [key, c] : e.terms) {
    PrintTerm t;
    t.key = key;
    t.coeff = &c;
    auto slots = unpack_key(key, e.dim, e.arity);
    for (int s = 0; s < e.arity; ++s) {
      std::vector<int> exps = a.exponents(slots[s]);
      for (int x : exps) {
        t.tuple.push_back(x);
        t.degree += x;
      }
    }
    terms.push_back(std::move(t));
  }
  std::stable_sort(terms.begin(), terms.end(), [](const PrintTerm& l, const PrintTerm& r) {
    if (l.degree != r.degree) return l.degree < r.degree;
    return l.tuple > r.tuple;
  });

  std::string out;
  for (const PrintTerm& t : terms) {
    auto slots = unpack_key(t.key, e.dim, e.arity);
    std::string mono;
    for (int s = 0; s < e.arity; ++s) {
      if (s) mono += " (x) ";
      mono += print_monomial(a, slots[s]);
    }
    bool unit_mono = e.arity == 1 && slots[0] == a.unit;

    Lifted l = lift_scalar(*t.coeff);
    bool single = l.terms.size() == 1;
    bool minus = false;
    std::string body;
    bool unit_coeff = single && l.den == 1 && l.terms[0].first == 0;
    if (unit_coeff && l.terms[0].second == 1) {
      body = unit_mono ? "1" : mono;
    } else if (unit_coeff && l.terms[0].second == -1) {
      minus = true;
      body = unit_mono ? "1" : mono;
    } else if (single) {
      std::string s = lifted_str(l);
      if (!s.empty() && s[0] == '-') {
        minus = true;
        s.erase(s.begin());
      }
      body = unit_mono ? s : s + " * " + mono;
    } else {
      std::string s = lifted_str(l);
      if (unit_mono)
        body = terms.size() == 1 || s[0] == '(' ? s : "(" + s + ")";
      else
        body = (s[0] == '(' ? s : "(" + s + ")") + " " + mono;
    }

    if (out.empty())
      out += (minus ? "-" : "") + body;
    else
      out += (minus ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace qcomm

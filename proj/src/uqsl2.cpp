#include "qcomm/uqsl2.hpp"

#include <map>
#include <stdexcept>

namespace qcomm {

namespace {

// Normal-ordering rewriter for words in Xm, K, Xp. Elements in flight
// are sparse maps from the packed basis index (a * n + b) * n + c.
struct Rewriter {
  int n;
  const CycloField& f;
  Scalar comm;  // 1 / (q - q^(-1))

  explicit Rewriter(int order)
      : n(order), f(CycloField::of_order(order)),
        comm((q_pow(f, 1) - q_pow(f, -1)).inv()) {}

  using Dict = std::map<std::uint32_t, Scalar>;

  std::uint32_t idx(int a, int b, int c) const {
    return (std::uint32_t)((a * n + b) * n + c);
  }

  static void accum(Dict& d, std::uint32_t k, const Scalar& v) {
    auto [it, fresh] = d.emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) d.erase(it);
    }
  }

  Dict mul_gen(const Dict& e, char g) const {
    Dict out;
    for (const auto& [k, v] : e) {
      int c = (int)(k % n), b = (int)(k / n % n), a = (int)(k / n / n);
      switch (g) {
        case 'p':
          if (c + 1 < n) accum(out, idx(a, b, c + 1), v);
          break;
        case 'k':
          accum(out, idx(a, (b + 1) % n, c), v * q_pow(f, -2L * c));
          break;
        case 'm':
          if (c == 0) {
            if (a + 1 < n) accum(out, idx(a + 1, b, 0), v * q_pow(f, -2L * b));
          } else {
            // Xp^c Xm = (Xp^(c-1) Xm) Xp + comm * Xp^(c-1) (K - K^(-1))
            Dict head{{idx(a, b, c - 1), v}};
            for (const auto& [k2, v2] : mul_gen(mul_gen(head, 'm'), 'p')) accum(out, k2, v2);
            Dict tk = mul_gen(head, 'k');
            for (const auto& [k2, v2] : tk) accum(out, k2, v2 * comm);
            Dict tki = head;
            for (int i = 0; i < n - 1; ++i) tki = mul_gen(tki, 'k');
            for (const auto& [k2, v2] : tki) accum(out, k2, -(v2 * comm));
          }
          break;
      }
    }
    return out;
  }

  Element product(std::uint32_t i, std::uint32_t j) const {
    int c = (int)(j % n), b = (int)(j / n % n), a = (int)(j / n / n);
    Dict d{{i, Scalar(1)}};
    for (int t = 0; t < a; ++t) d = mul_gen(d, 'm');
    for (int t = 0; t < b; ++t) d = mul_gen(d, 'k');
    for (int t = 0; t < c; ++t) d = mul_gen(d, 'p');
    Element e = Element::zero((std::uint32_t)(n * n * n));
    for (const auto& [k, v] : d) e.add_term(k, v);
    return e;
  }
};

void gate(const std::vector<CheckReport>& reports, const char* what) {
  for (const CheckReport& r : reports)
    if (!r.pass) {
      std::string msg = std::string(what) + ": " + r.check + " failed";
      if (r.counterexample) {
        msg += " at";
        for (const std::string& in : r.counterexample->inputs) msg += " " + in;
        msg += "; " + r.counterexample->lhs + " != " + r.counterexample->rhs;
      }
      throw ConstructionError(msg);
    }
}

Element power_tensor(const Algebra& a, const Element& base, int e) {
  Element r = unit_element(a, 2);
  for (int i = 0; i < e; ++i) r = mul_tensor(a, r, base);
  return r;
}

}  // namespace

HopfData build_uqsl2(int order) {
  if (order < 3 || order % 2 == 0)
    throw std::invalid_argument("quantum group order must be odd and at least 3");
  Rewriter rw(order);
  int n = order;

  HopfData h;
  h.alg = make_algebra({"Xm", "K", "Xp"}, {n, n, n},
                       [&](std::uint32_t i, std::uint32_t j) { return rw.product(i, j); });
  const Algebra& a = h.alg;

  auto mono = [&](int am, int bk, int cp) {
    return Element::basis(a.dim, 1, rw.idx(am, bk, cp));
  };
  auto t2 = [&](const Element& u, const Element& v) { return tensor(u, v); };

  Element dK = t2(mono(0, 1, 0), mono(0, 1, 0));
  Element dXp = add(t2(mono(0, 0, 1), mono(0, 0, 0)), t2(mono(0, 1, 0), mono(0, 0, 1)));
  Element dXm = add(t2(mono(1, 0, 0), mono(0, n - 1, 0)), t2(mono(0, 0, 0), mono(1, 0, 0)));

  h.coproduct = LinearMap::make(a.dim, 1, 2);
  for (std::uint32_t i = 0; i < a.dim; ++i) {
    auto exps = a.exponents(i);
    Element d = power_tensor(a, dXm, exps[0]);
    d = mul_tensor(a, d, power_tensor(a, dK, exps[1]));
    d = mul_tensor(a, d, power_tensor(a, dXp, exps[2]));
    h.coproduct.table[i] = std::move(d);
  }

  h.counit.assign(a.dim, Scalar(0));
  for (std::uint32_t i = 0; i < a.dim; ++i) {
    auto exps = a.exponents(i);
    if (exps[0] == 0 && exps[2] == 0) h.counit[i] = Scalar(1);
  }

  Element sK = mono(0, n - 1, 0);
  Element sXp = negate(mono(0, n - 1, 1));
  Element sXm = negate(mono(1, 1, 0));
  h.antipode = LinearMap::make(a.dim, 1, 1);
  for (std::uint32_t i = 0; i < a.dim; ++i) {
    auto exps = a.exponents(i);
    Element s = Element::basis(a.dim, 1, a.unit);
    for (int t = 0; t < exps[2]; ++t) s = mul(a, s, sXp);
    for (int t = 0; t < exps[1]; ++t) s = mul(a, s, sK);
    for (int t = 0; t < exps[0]; ++t) s = mul(a, s, sXm);
    h.antipode.table[i] = std::move(s);
  }

  gate(check_hopf_axioms(h), "quantum group construction");
  return h;
}

QTStructure build_standard_r(const HopfData& h) {
  const Algebra& a = h.alg;
  if (a.factor_names != std::vector<std::string>{"Xm", "K", "Xp"} ||
      a.factor_orders != std::vector<int>{3, 3, 3})
    throw std::invalid_argument("standard r-matrix is only instantiated at order 3");
  const CycloField& f = CycloField::of_order(3);

  auto kpow = [&](int i) { return a.index_of({0, i, 0}); };
  Element rk = Element::zero(a.dim, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      rk.add_term(pack2(a.dim, kpow(i), kpow(j)), q_pow(f, -2L * i * j));

  Element rx = unit_element(a, 2);
  rx.add_term(pack2(a.dim, a.index_of({1, 0, 0}), a.index_of({0, 0, 1})),
              q_pow(f, 1) - q_pow(f, -1));
  rx.add_term(pack2(a.dim, a.index_of({2, 0, 0}), a.index_of({0, 0, 2})),
              Scalar(3) * q_pow(f, 1));

  Element r = scale(mul_tensor(a, rk, rx), Scalar(Rational(1, 3)));

  QTStructure qt = build_qt_structure(a, r);
  gate(check_qt_axioms(h, qt), "r-matrix gate");
  gate({check_yang_baxter(a, qt)}, "r-matrix gate");
  gate(check_r_counit_antipode(h, qt), "r-matrix gate");
  return qt;
}

HopfData build_cyclic_group_hopf(int order) {
  if (order < 2) throw std::invalid_argument("cyclic group order must be at least 2");
  int n = order;
  HopfData h;
  h.alg = make_algebra({"g"}, {n}, [&](std::uint32_t i, std::uint32_t j) {
    return Element::basis((std::uint32_t)n, 1, (i + j) % n);
  });
  const Algebra& a = h.alg;
  h.coproduct = LinearMap::make(a.dim, 1, 2);
  h.antipode = LinearMap::make(a.dim, 1, 1);
  h.counit.assign(a.dim, Scalar(1));
  for (std::uint32_t i = 0; i < a.dim; ++i) {
    h.coproduct.table[i] = Element::basis(a.dim, 2, pack2(a.dim, i, i));
    h.antipode.table[i] = Element::basis(a.dim, 1, (a.dim - i) % a.dim);
  }
  gate(check_hopf_axioms(h), "group algebra construction");
  return h;
}

}  // namespace qcomm

#include "qcomm/algebra.hpp"

#include <stdexcept>

namespace qcomm {

std::vector<int> Algebra::exponents(std::uint32_t idx) const {
  std::vector<int> e(factor_orders.size());
  for (int f = (int)factor_orders.size() - 1; f >= 0; --f) {
    e[f] = (int)(idx % factor_orders[f]);
    idx /= factor_orders[f];
  }
  return e;
}

std::uint32_t Algebra::index_of(const std::vector<int>& exps) const {
  std::uint32_t idx = 0;
  for (std::size_t f = 0; f < factor_orders.size(); ++f) {
    if (exps[f] < 0 || exps[f] >= factor_orders[f]) throw std::out_of_range("exponent out of range");
    idx = idx * factor_orders[f] + exps[f];
  }
  return idx;
}

std::string Algebra::label(std::uint32_t idx) const {
  auto e = exponents(idx);
  std::string s;
  for (std::size_t f = 0; f < factor_names.size(); ++f) {
    if (!s.empty()) s += ' ';
    s += factor_names[f] + "^" + std::to_string(e[f]);
  }
  return s;
}

std::optional<std::uint32_t> Algebra::find_label(const std::string& lab) const {
  auto it = label_index.find(lab);
  if (it == label_index.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Algebra::generator(int factor) const {
  std::vector<int> e(factor_orders.size(), 0);
  e[factor] = 1;
  return index_of(e);
}

Algebra make_algebra(std::vector<std::string> factor_names, std::vector<int> factor_orders,
                     const StructureFn& product, bool verify) {
  Algebra a;
  a.factor_names = std::move(factor_names);
  a.factor_orders = std::move(factor_orders);
  std::uint64_t dim = 1;
  for (int o : a.factor_orders) dim *= o;
  a.dim = (std::uint32_t)dim;
  a.unit = 0;
  a.mul_table.reserve(dim * dim);
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t j = 0; j < a.dim; ++j) {
      Element e = product(i, j);
      if (e.dim != a.dim || e.arity != 1) throw std::logic_error("bad structure constant shape");
      a.mul_table.push_back(std::move(e));
    }
  for (std::uint32_t i = 0; i < a.dim; ++i) a.label_index.emplace(a.label(i), i);
  if (verify) {
    auto u = check_unit_laws(a);
    if (!u.pass) throw ConstructionError("unit law fails at " + u.counterexample->inputs[0]);
    auto s = check_associativity(a);
    if (!s.pass)
      throw ConstructionError("associativity fails at (" + s.counterexample->inputs[0] + ", " +
                              s.counterexample->inputs[1] + ", " + s.counterexample->inputs[2] + ")");
  }
  return a;
}

CheckReport check_unit_laws(const Algebra& a) {
  for (std::uint32_t i = 0; i < a.dim; ++i) {
    Element ei = Element::basis(a.dim, 1, i);
    if (a.basis_product(a.unit, i) != ei || a.basis_product(i, a.unit) != ei) {
      Counterexample ce;
      ce.inputs = {a.label(i)};
      ce.lhs = "unit product differs from the basis element";
      ce.rhs = a.label(i);
      return CheckReport::failed("unit-laws", ce);
    }
  }
  return CheckReport::ok("unit-laws");
}

CheckReport check_associativity(const Algebra& a) {
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t j = 0; j < a.dim; ++j) {
      const Element& ij = a.basis_product(i, j);
      for (std::uint32_t k = 0; k < a.dim; ++k) {
        Element lhs = mul(a, ij, Element::basis(a.dim, 1, k));
        Element rhs = mul(a, Element::basis(a.dim, 1, i), a.basis_product(j, k));
        if (lhs != rhs) {
          Counterexample ce;
          ce.inputs = {a.label(i), a.label(j), a.label(k)};
          ce.lhs = "left association differs";
          ce.rhs = "right association";
          return CheckReport::failed("associativity", ce);
        }
      }
    }
  return CheckReport::ok("associativity");
}

Element mul(const Algebra& a, const Element& u, const Element& v) {
  if (u.arity != 1 || v.arity != 1 || u.dim != a.dim || v.dim != a.dim)
    throw std::invalid_argument("product needs arity-1 elements over this basis");
  Element r = Element::zero(a.dim, 1);
  for (const auto& tu : u.terms)
    for (const auto& tv : v.terms)
      r = add(r, scale(a.basis_product((std::uint32_t)tu.first, (std::uint32_t)tv.first),
                       tu.second * tv.second));
  return r;
}

Element mul_tensor(const Algebra& a, const Element& u, const Element& v) {
  if (u.arity != v.arity || u.dim != a.dim || v.dim != a.dim)
    throw std::invalid_argument("tensor product factors have mismatched shape");
  int arity = u.arity;
  Element r = Element::zero(a.dim, (std::uint8_t)arity);
  for (const auto& tu : u.terms)
    for (const auto& tv : v.terms) {
      auto iu = unpack(u, tu.first);
      auto iv = unpack(v, tv.first);
      // Expand the per-slot structure constants' cartesian product.
      std::array<const Element*, 4> slot{};
      std::array<std::size_t, 4> pos{};
      bool dead = false;
      for (int s = 0; s < arity; ++s) {
        slot[s] = &a.basis_product(iu[s], iv[s]);
        if (slot[s]->terms.empty()) dead = true;
      }
      if (dead) continue;
      while (true) {
        Scalar c = tu.second * tv.second;
        std::uint64_t key = 0;
        for (int s = 0; s < arity; ++s) {
          const auto& term = slot[s]->terms[pos[s]];
          key = key * a.dim + term.first;
          c *= term.second;
        }
        r.add_term(key, c);
        int s = arity - 1;
        while (s >= 0) {
          if (++pos[s] < slot[s]->terms.size()) break;
          pos[s] = 0;
          --s;
        }
        if (s < 0) break;
      }
    }
  return r;
}

LinearMap mul_map(const Algebra& a) {
  LinearMap m = LinearMap::make(a.dim, 2, 1);
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t j = 0; j < a.dim; ++j) m.table[pack2(a.dim, i, j)] = a.basis_product(i, j);
  return m;
}

Element unit_element(const Algebra& a, std::uint8_t arity) {
  std::uint64_t key = 0;
  for (int s = 0; s < arity; ++s) key = key * a.dim + a.unit;
  return Element::basis(a.dim, arity, key);
}

}  // namespace qcomm

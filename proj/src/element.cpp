#include "qcomm/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcomm {

namespace {

std::uint64_t dim_pow(std::uint32_t dim, std::uint8_t arity) {
  std::uint64_t p = 1;
  for (int i = 0; i < arity; ++i) p *= dim;
  return p;
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Scalar Element::coeff(std::uint64_t key) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.first < k; });
  if (it != terms.end() && it->first == key) return it->second;
  return Scalar(0);
}

void Element::add_term(std::uint64_t key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms.begin(), terms.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.first < k; });
  if (it != terms.end() && it->first == key) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  } else {
    terms.insert(it, Term(key, c));
  }
}

bool operator==(const Element& a, const Element& b) {
  if (a.dim != b.dim || a.arity != b.arity || a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].first != b.terms[i].first) return false;
    if (!(a.terms[i].second == b.terms[i].second)) return false;
  }
  return true;
}

std::uint64_t pack2(std::uint32_t dim, std::uint32_t i, std::uint32_t j) {
  return (std::uint64_t)i * dim + j;
}

std::uint64_t pack3(std::uint32_t dim, std::uint32_t i, std::uint32_t j, std::uint32_t k) {
  return ((std::uint64_t)i * dim + j) * dim + k;
}

std::array<std::uint32_t, 4> unpack_key(std::uint64_t key, std::uint32_t dim, std::uint8_t arity) {
  std::array<std::uint32_t, 4> idx{};
  for (int s = arity - 1; s >= 0; --s) {
    idx[s] = (std::uint32_t)(key % dim);
    key /= dim;
  }
  return idx;
}

std::array<std::uint32_t, 4> unpack(const Element& e, std::uint64_t key) {
  return unpack_key(key, e.dim, e.arity);
}

Element add(const Element& a, const Element& b) {
  require(a.dim == b.dim && a.arity == b.arity, "element shape mismatch");
  Element r = Element::zero(a.dim, a.arity);
  auto ia = a.terms.begin(), ib = b.terms.begin();
  while (ia != a.terms.end() && ib != b.terms.end()) {
    if (ia->first < ib->first) {
      r.terms.push_back(*ia++);
    } else if (ib->first < ia->first) {
      r.terms.push_back(*ib++);
    } else {
      Scalar c = ia->second + ib->second;
      if (!c.is_zero()) r.terms.emplace_back(ia->first, c);
      ++ia;
      ++ib;
    }
  }
  r.terms.insert(r.terms.end(), ia, a.terms.end());
  r.terms.insert(r.terms.end(), ib, b.terms.end());
  return r;
}

Element sub(const Element& a, const Element& b) { return add(a, negate(b)); }

Element scale(const Element& a, const Scalar& c) {
  if (c.is_zero()) return Element::zero(a.dim, a.arity);
  Element r = Element::zero(a.dim, a.arity);
  for (const auto& t : a.terms) {
    Scalar v = t.second * c;
    if (!v.is_zero()) r.terms.emplace_back(t.first, v);
  }
  return r;
}

Element negate(const Element& a) {
  Element r = a;
  for (auto& t : r.terms) t.second = -t.second;
  return r;
}

Element conj_coeffs(const Element& a) {
  Element r = a;
  for (auto& t : r.terms) t.second = t.second.conj();
  return r;
}

Element tensor(const Element& a, const Element& b) {
  require(a.dim == b.dim, "tensor factors over different bases");
  Element r = Element::zero(a.dim, (std::uint8_t)(a.arity + b.arity));
  std::uint64_t shift = dim_pow(b.dim, b.arity);
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      Scalar c = ta.second * tb.second;
      if (!c.is_zero()) r.terms.emplace_back(ta.first * shift + tb.first, c);
    }
  std::sort(r.terms.begin(), r.terms.end(),
            [](const Element::Term& x, const Element::Term& y) { return x.first < y.first; });
  return r;
}

Element tau(const Element& a) {
  require(a.arity == 2, "flip needs arity 2");
  Element r = Element::zero(a.dim, 2);
  for (const auto& t : a.terms) {
    auto idx = unpack(a, t.first);
    r.add_term(pack2(a.dim, idx[1], idx[0]), t.second);
  }
  return r;
}

LinearMap LinearMap::make(std::uint32_t dim, std::uint8_t dom_arity, std::uint8_t cod_arity) {
  LinearMap f;
  f.dim = dim;
  f.dom_arity = dom_arity;
  f.cod_arity = cod_arity;
  f.table.assign(dim_pow(dim, dom_arity), Element::zero(dim, cod_arity));
  return f;
}

LinearMap identity_map(std::uint32_t dim, std::uint8_t arity) {
  LinearMap f = LinearMap::make(dim, arity, arity);
  for (std::uint64_t k = 0; k < f.table.size(); ++k) f.table[k] = Element::basis(dim, arity, k);
  return f;
}

LinearMap flip_map(std::uint32_t dim) {
  LinearMap f = LinearMap::make(dim, 2, 2);
  for (std::uint32_t i = 0; i < dim; ++i)
    for (std::uint32_t j = 0; j < dim; ++j)
      f.table[pack2(dim, i, j)] = Element::basis(dim, 2, pack2(dim, j, i));
  return f;
}

Element apply(const LinearMap& f, const Element& e) {
  require(e.arity == f.dom_arity && e.dim == f.dim, "map arity mismatch");
  Element r = Element::zero(f.dim, f.cod_arity);
  for (const auto& t : e.terms) r = add(r, scale(f.table[t.first], t.second));
  return r;
}

Element apply_at(const LinearMap& f, const Element& e, int slot) {
  require(e.dim == f.dim, "map arity mismatch");
  require(slot >= 0 && slot + f.dom_arity <= e.arity, "slot out of range");
  int tail = e.arity - slot - f.dom_arity;
  std::uint64_t tail_size = dim_pow(e.dim, (std::uint8_t)tail);
  std::uint64_t mid_size = dim_pow(e.dim, f.dom_arity);
  std::uint64_t cod_size = dim_pow(e.dim, f.cod_arity);
  Element r = Element::zero(e.dim, (std::uint8_t)(e.arity - f.dom_arity + f.cod_arity));
  for (const auto& [key, c] : e.terms) {
    std::uint64_t suffix = key % tail_size;
    std::uint64_t mid = key / tail_size % mid_size;
    std::uint64_t prefix = key / tail_size / mid_size;
    for (const auto& [mk, c2] : f.table[mid].terms)
      r.add_term((prefix * cod_size + mk) * tail_size + suffix, c * c2);
  }
  return r;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  require(g.cod_arity == f.dom_arity && f.dim == g.dim, "map composition mismatch");
  LinearMap h = LinearMap::make(f.dim, g.dom_arity, f.cod_arity);
  for (std::size_t k = 0; k < g.table.size(); ++k) h.table[k] = apply(f, g.table[k]);
  return h;
}

LinearMap map_tensor(const LinearMap& f, const LinearMap& g) {
  require(f.dim == g.dim, "map tensor over different bases");
  LinearMap h = LinearMap::make(f.dim, (std::uint8_t)(f.dom_arity + g.dom_arity),
                                (std::uint8_t)(f.cod_arity + g.cod_arity));
  std::uint64_t gsize = dim_pow(g.dim, g.dom_arity);
  for (std::uint64_t u = 0; u < f.table.size(); ++u)
    for (std::uint64_t v = 0; v < gsize; ++v)
      h.table[u * gsize + v] = tensor(f.table[u], g.table[v]);
  return h;
}

}  // namespace qcomm

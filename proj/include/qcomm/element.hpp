#pragma once

#include <array>
#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <vector>

#include "qcomm/cyclotomic.hpp"

namespace qcomm {

/// Sparse formal linear combination over an indexed basis. An Element of
/// arity k lives in the k-fold tensor power of one underlying space; all
/// slots share the same per-slot dimension. Basis tuples are packed into a
/// single key with the first slot most significant, so term order is
/// lexicographic on slot indices. Terms are kept sorted with no explicit
/// zeros, making equality a plain list comparison.
struct Element {
  using Term = std::pair<std::uint64_t, Scalar>;
  using Terms = boost::container::small_vector<Term, 4>;

  std::uint32_t dim = 0;
  std::uint8_t arity = 1;
  Terms terms;

  static Element zero(std::uint32_t dim, std::uint8_t arity = 1) {
    Element e;
    e.dim = dim;
    e.arity = arity;
    return e;
  }
  static Element basis(std::uint32_t dim, std::uint8_t arity, std::uint64_t key) {
    Element e = zero(dim, arity);
    e.terms.emplace_back(key, Scalar(1));
    return e;
  }

  bool is_zero() const { return terms.empty(); }
  /// Coefficient of the given basis key (zero if absent).
  Scalar coeff(std::uint64_t key) const;
  /// Adds c * basis(key) in place.
  void add_term(std::uint64_t key, const Scalar& c);

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
};

std::uint64_t pack2(std::uint32_t dim, std::uint32_t i, std::uint32_t j);
std::uint64_t pack3(std::uint32_t dim, std::uint32_t i, std::uint32_t j, std::uint32_t k);
/// Slot indices of a packed key, first slot first.
std::array<std::uint32_t, 4> unpack(const Element& e, std::uint64_t key);
std::array<std::uint32_t, 4> unpack_key(std::uint64_t key, std::uint32_t dim, std::uint8_t arity);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Element& a, const Scalar& c);
Element negate(const Element& a);
/// Applies complex conjugation to every coefficient.
Element conj_coeffs(const Element& a);
/// Tensor product; arities add, dimensions must agree.
Element tensor(const Element& a, const Element& b);
/// Flip of the two slots of an arity-2 element.
Element tau(const Element& a);

/// Total table of a linear map between tensor powers of one space,
/// stored as the image of every domain basis tuple.
struct LinearMap {
  std::uint32_t dim = 0;
  std::uint8_t dom_arity = 1;
  std::uint8_t cod_arity = 1;
  std::vector<Element> table;

  static LinearMap make(std::uint32_t dim, std::uint8_t dom_arity, std::uint8_t cod_arity);
};

LinearMap identity_map(std::uint32_t dim, std::uint8_t arity = 1);
/// The slot flip on arity 2.
LinearMap flip_map(std::uint32_t dim);
Element apply(const LinearMap& f, const Element& e);
/// Applies f to the dom_arity consecutive slots starting at slot,
/// leaving the others alone, so the identity never has to be
/// materialized: apply_at(m, e, 1) on arity 3 is (1 (x) m)(e).
Element apply_at(const LinearMap& f, const Element& e, int slot);
/// f after g.
LinearMap compose(const LinearMap& f, const LinearMap& g);
/// Slot-wise product map f (x) g.
LinearMap map_tensor(const LinearMap& f, const LinearMap& g);

}  // namespace qcomm

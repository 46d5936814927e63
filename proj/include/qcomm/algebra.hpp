#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcomm/element.hpp"
#include "qcomm/report.hpp"

namespace qcomm {

/// Finite-dimensional associative unital algebra over Q(q), presented by a
/// fully expanded structure-constant table on a monomial basis. The basis
/// is indexed by exponent tuples in mixed radix, first factor most
/// significant, so index 0 is the unit monomial and iteration order is
/// lexicographic on exponents. Rewriting happens once in the builders;
/// multiplication here is pure table lookup.
struct Algebra {
  std::vector<std::string> factor_names;
  std::vector<int> factor_orders;
  std::uint32_t dim = 0;
  std::uint32_t unit = 0;
  std::vector<Element> mul_table;
  std::unordered_map<std::string, std::uint32_t> label_index;

  std::vector<int> exponents(std::uint32_t idx) const;
  std::uint32_t index_of(const std::vector<int>& exps) const;
  /// Canonical full label, every factor with an explicit exponent,
  /// e.g. "x^1 y^2".
  std::string label(std::uint32_t idx) const;
  std::optional<std::uint32_t> find_label(const std::string& lab) const;
  const Element& basis_product(std::uint32_t i, std::uint32_t j) const {
    return mul_table[(std::uint64_t)i * dim + j];
  }
  /// Index of the basis monomial that is a single generator.
  std::uint32_t generator(int factor) const;
};

using StructureFn = std::function<Element(std::uint32_t, std::uint32_t)>;

/// Builds the table from a product rule and, unless told otherwise,
/// verifies the unit laws and associativity on every basis tuple,
/// throwing ConstructionError with the first failing tuple.
Algebra make_algebra(std::vector<std::string> factor_names, std::vector<int> factor_orders,
                     const StructureFn& product, bool verify = true);

CheckReport check_unit_laws(const Algebra& a);
CheckReport check_associativity(const Algebra& a);

Element mul(const Algebra& a, const Element& u, const Element& v);
/// Slot-wise product of two equal-arity tensors over a's basis.
Element mul_tensor(const Algebra& a, const Element& u, const Element& v);
/// The multiplication as an arity 2 -> 1 table.
LinearMap mul_map(const Algebra& a);
/// The unit of the arity-fold tensor power algebra.
Element unit_element(const Algebra& a, std::uint8_t arity = 1);

}  // namespace qcomm

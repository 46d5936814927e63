#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "qcomm/braiding.hpp"
#include "qcomm/qplane.hpp"

namespace qcomm {

/// All serialization goes through the ordered variant so objects keep
/// their insertion order and a fixed input always renders to the same
/// bytes.
using Json = nlohmann::ordered_json;

/// Scalar as {den, coeffs}: one positive common denominator and an
/// integer numerator per power 1, q, ..., q^(degree-1). The value is
/// bound to the field before writing, so an unbound constant and its
/// bound copy produce identical bytes.
Json scalar_to_json(const Scalar& s, const CycloField& f);
Scalar scalar_from_json(const Json& j, const CycloField& f);

/// Element as an array of {label, scalar} terms in basis order. Tensor
/// slots are joined with " (x) " inside the label.
Json element_to_json(const Element& e, const Algebra& a, const CycloField& f);
Element element_from_json(const Json& j, const Algebra& a, const CycloField& f,
                          std::uint8_t arity = 1);

/// Algebra as {factors, basis, unit, mul}: the generating factors with
/// their orders, the canonical basis labels, the unit label, and the
/// full structure-constant table keyed "i,j" by basis indices.
Json algebra_to_json(const Algebra& a, const CycloField& f);
/// Rebuilds the algebra through the ordinary builder, re-running the
/// unit and associativity gates, and checks the stored labels against
/// the reconstructed grid. Throws ConstructionError on any mismatch.
Algebra algebra_from_json(const Json& j, const CycloField& f);

/// The Algebra schema extended with coproduct and antipode tables keyed
/// by basis index, the counit as a scalar array, and optionally the
/// R-matrix as an arity-2 element.
Json hopf_to_json(const HopfData& h, const CycloField& f, const Element* r = nullptr);
/// Import re-verifies the Hopf axioms and throws ConstructionError when
/// any of them fails on the decoded tables.
HopfData hopf_from_json(const Json& j, const CycloField& f);
/// The R table of a serialized Hopf algebra, when one was written.
std::optional<Element> r_matrix_from_json(const Json& j, const Algebra& h,
                                          const CycloField& f);

/// Module algebra as {algebra, action} with the action images keyed
/// "h,a" over the Hopf basis and the module basis.
Json module_to_json(const ModuleAlgebra& m, const CycloField& f);

/// Braided structure constants as {N, basis, sigma, C, closed} with
/// sigma keyed "i,j,m,k" and C keyed "i,j,k" in subspace coordinates.
Json qlie_to_json(const QLieData& d, const CycloField& f);

/// Report as {check, status, note?, counterexample?}; the timing field
/// stays out so a fixed outcome serializes reproducibly.
Json report_to_json(const CheckReport& r);
Json reports_to_json(const std::vector<CheckReport>& rs);

/// Two-space layout with a trailing newline.
std::string json_bytes(const Json& j);
void write_json_file(const std::string& path, const Json& j);
Json read_json_file(const std::string& path);

}  // namespace qcomm

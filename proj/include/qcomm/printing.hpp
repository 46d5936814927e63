#pragma once

#include <string>

#include "qcomm/algebra.hpp"

namespace qcomm {

/// Canonical scalar form, compact (no spaces). The format contract:
///   - zero prints "0"; rational constants print "3", "-1/3";
///   - for prime order the value is lifted to the power basis
///     {1, q, .., q^(N-1)} choosing the representative with fewest
///     terms, then smallest maximal integer numerator, then smallest
///     shift, so eigenvalue-like values print as a bare power of q;
///   - terms with positive coefficients come first in ascending powers,
///     then negative ones in ascending powers: "1-q^2", "q^2-q";
///   - a common denominator is pulled out last: "(q^2-q)/3".
std::string print_scalar(const Scalar& s);

/// True when the printed form is a single product term, e.g. "q^2" or
/// "2q" or "q/3", as opposed to a sum like "1-q^2".
bool scalar_prints_single_term(const Scalar& s);

/// Canonical element form. Terms are ordered by total degree of the
/// concatenated exponent tuple, ties broken by descending lexicographic
/// comparison, so low-degree terms lead and x-heavy monomials precede
/// y-heavy ones within a degree. Tensor slots are joined with " (x) ".
/// Coefficient attachment: unit coefficients fold into the sign, a
/// single-term scalar is attached with " * ", a sum scalar is
/// parenthesized and attached with a space. The unit monomial prints as
/// the bare scalar.
std::string print_element(const Algebra& a, const Element& e);

/// Monomial part only, e.g. "x y^2", "1", "Xm K^2".
std::string print_monomial(const Algebra& a, std::uint32_t idx);

}  // namespace qcomm

#pragma once

#include <vector>

#include "qcomm/algebra.hpp"

namespace qcomm {

/// Hopf algebra presented by total tables on a monomial basis: the
/// coproduct as an arity 1 -> 2 map, the counit as one scalar per basis
/// monomial, the antipode as an arity 1 -> 1 map.
struct HopfData {
  Algebra alg;
  LinearMap coproduct;
  std::vector<Scalar> counit;
  LinearMap antipode;
};

/// Linear extension of the counit.
Scalar counit_of(const HopfData& h, const Element& e);

/// Coproduct of an element of any arity, applied to one slot.
Element coproduct_slot(const HopfData& h, const Element& e, int slot);

/// Exhaustive verification of the Hopf axioms on the basis: coproduct
/// and counit are algebra morphisms, coassociativity, the counit laws,
/// and the antipode laws.
std::vector<CheckReport> check_hopf_axioms(const HopfData& h);

/// Universal R-matrix with its inverse and the reversed braiding datum
/// Rbar = flip of the inverse.
struct QTStructure {
  Element R;
  Element Rinv;
  Element Rbar;
};

/// Inverts R by an exact sparse elimination in the tensor-square algebra
/// and checks the inverse two-sidedly. Throws ConstructionError when R
/// is singular.
QTStructure build_qt_structure(const Algebra& h, const Element& R);

/// The intertwining law flip(coproduct(h)) R = R coproduct(h) for every
/// basis element, and the two fusion laws expanding the coproduct on
/// either leg of R inside the triple tensor power.
std::vector<CheckReport> check_qt_axioms(const HopfData& h, const QTStructure& qt);

/// R12 R13 R23 = R23 R13 R12 in the triple tensor power.
CheckReport check_yang_baxter(const Algebra& h, const QTStructure& qt);

/// Counit on either leg gives the unit; the antipode applied to both
/// legs reproduces R.
std::vector<CheckReport> check_r_counit_antipode(const HopfData& h, const QTStructure& qt);

/// Whether the reversed braiding datum coincides with R itself, i.e.
/// flip(R) R = 1 (x) 1.
bool is_triangular(const QTStructure& qt);

/// Embeds an arity-2 element into arity 3 on the given pair of slots
/// (0-based, ascending), padding the remaining slot with the unit.
Element embed_pair(const Algebra& h, const Element& r, int slot_a, int slot_b);

}  // namespace qcomm

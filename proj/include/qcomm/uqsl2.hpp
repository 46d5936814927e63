#pragma once

#include "qcomm/hopf.hpp"

namespace qcomm {

/// The reduced quantum group U_q(sl2) at a primitive odd root of unity:
/// basis Xm^a K^b Xp^c with 0 <= a, b, c < order, K of that order and
/// Xp, Xm nilpotent of the same index. The multiplication table comes
/// from a rewriting engine that normal-orders words; coproduct, counit
/// and antipode are extended from the generators. Construction runs the
/// full Hopf-axiom sweep and throws ConstructionError on any failure.
HopfData build_uqsl2(int order);

/// The standard R-matrix of the order-3 quantum group, inverted and
/// gated through intertwining, both fusion laws, Yang-Baxter and the
/// counit/antipode leg identities. Throws ConstructionError when a gate
/// fails and std::invalid_argument away from order 3.
QTStructure build_standard_r(const HopfData& h);

/// Group algebra of the cyclic group of the given order with grouplike
/// generator g. With the identity R-matrix this is the triangular foil
/// to the quantum group.
HopfData build_cyclic_group_hopf(int order);

}  // namespace qcomm

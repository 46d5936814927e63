#pragma once

#include "qcomm/eigen_support.hpp"
#include "qcomm/hopf.hpp"

namespace qcomm {

/// An algebra with a left Hopf-algebra action, tabulated on every
/// (H-basis, A-basis) pair. The Hopf algebra is referenced, not owned;
/// the caller keeps it alive for the lifetime of the module.
struct ModuleAlgebra {
  Algebra alg;
  const HopfData* hopf = nullptr;
  std::vector<Element> action;

  const Element& act_basis(std::uint32_t h_idx, std::uint32_t a_idx) const {
    return action[(std::uint64_t)h_idx * alg.dim + a_idx];
  }
};

/// Linear extension of the action to arbitrary elements of H and A.
Element act(const ModuleAlgebra& m, const Element& h, const Element& a);

/// Exhaustive module-algebra verification: unit laws, action
/// compatibility with the H-multiplication on all basis triples, and
/// the Leibniz-compatibility h(ab) = (h1 a)(h2 b) for the generator
/// monomials of H against all basis pairs of A.
std::vector<CheckReport> check_module_algebra(const ModuleAlgebra& m);

/// The reduced quantum plane x^N = y^N = 1 with y x = q^(N-1) x y,
/// carrying the coordinate action K x = q x, K y = q^(-1) y,
/// Xp y = x, Xm x = y. Construction verifies the module-algebra laws
/// and reproduces the four coordinate braiding fixtures computed from
/// the R-matrix, aborting on any mismatch.
ModuleAlgebra build_quantum_plane(const HopfData& h, const QTStructure& qt);

/// The derivative extension of the plane, realized as operators on it:
/// x and y act by left multiplication, dx and dy as q-difference
/// operators whose twist exponents are selected from a finite candidate
/// set by the commutator fixtures. Products are operator compositions
/// re-extracted in the normal-ordered basis, so associativity is
/// inherited from the faithful matrix realization (the rank-81 check
/// guards faithfulness). The action on derivatives is solved exactly
/// from the derivative braiding fixtures in three staged linear solves,
/// and the construction aborts unless all sixteen braiding fixtures
/// then reproduce.
ModuleAlgebra build_extended_plane(const HopfData& h, const QTStructure& qt);

/// The plane again, acted on by the cyclic group algebra through
/// g (x^a y^b) = q^(a-b) x^a y^b. With R = 1 (x) 1 this is the
/// triangular companion whose braiding is the plain flip.
ModuleAlgebra build_toy_module(const HopfData& toy, const Algebra& plane);

/// The two displayed 3x3 matrices representing the reduced plane:
/// x diagonal, y the cyclic shift. They satisfy x y = q y x, yet their
/// ordinary commutator [x, x] vanishes while the braided one does not.
struct MatrixRep {
  Matrix3 x;
  Matrix3 y;
};
MatrixRep matrix_rep();

}  // namespace qcomm

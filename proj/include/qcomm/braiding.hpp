#pragma once

#include <array>
#include <map>
#include <vector>

#include "qcomm/qplane.hpp"

namespace qcomm {

/// The braiding of a module algebra, chi(a (x) b) = (R2 b) (x) (R1 a),
/// together with its inverse chi_bar built from tau(R^-1), both
/// tabulated on all basis pairs. The module and the quasi-triangular
/// structure are referenced, not owned.
struct Braiding {
  const ModuleAlgebra* mod = nullptr;
  const QTStructure* qt = nullptr;
  LinearMap chi;
  LinearMap chi_bar;
};

/// Tabulates chi and chi_bar and verifies the unit braiding laws
/// chi(a (x) 1) = 1 (x) a and chi(1 (x) a) = a (x) 1 along with their
/// chi_bar counterparts, aborting on any mismatch.
Braiding build_braiding(const ModuleAlgebra& m, const QTStructure& qt);

/// chi extended linearly to an arbitrary arity-2 element.
Element braid(const Braiding& b, const Element& t);
Element braid_bar(const Braiding& b, const Element& t);

/// The deformed commutator m(1 - chi)(u (x) v) of arity-1 elements.
Element q_commutator(const Braiding& b, const Element& u, const Element& v);
/// The same with chi_bar in place of chi.
Element q_commutator_bar(const Braiding& b, const Element& u, const Element& v);

/// chi(a (x) b) regrouped by its second tensor slot: the returned pairs
/// (sigma_j, j) satisfy chi(a (x) b) = sum_j sigma_j (x) e_j with every
/// sigma_j nonzero, ascending in j.
std::vector<std::pair<Element, std::uint32_t>> sigma_decompose(const Braiding& b,
                                                               std::uint32_t a_idx,
                                                               std::uint32_t b_idx);

/// chi_bar after chi and chi after chi_bar are both the identity on
/// every basis pair.
CheckReport check_braiding_inverse(const Braiding& b);

/// Product rule in the second commutator slot, on every basis triple:
/// the commutator form [a, bc] = [a, b] c + sigma_a^i(b) [e_i, c], the
/// formal form chi(a (x) bc) = (m (x) 1)(1 (x) chi)(chi(a (x) b) (x) c),
/// and the slot-wise composition of the sigma maps through a product in
/// their argument, each evaluated by an independent code path.
CheckReport check_leibniz_second(const Braiding& b);

/// Product rule in the first commutator slot, on every basis triple:
/// [ab, c] = [a, sigma_b^i(c)] e_i + a [b, c] and the formal form
/// chi(ab (x) c) = (1 (x) m)(chi (x) 1)(a (x) chi(b (x) c)).
CheckReport check_leibniz_first(const Braiding& b);

/// h [a, b] = [h1 a, h2 b] summed over the coproduct, for each listed
/// H basis monomial against every basis pair of A. An empty list means
/// the per-factor defaults: exponent one and, for factors of order
/// above two, the inverse power.
CheckReport check_covariance(const Braiding& b, std::vector<std::uint32_t> gens = {});

/// [a, b]_chi = -[sigma_a^i(b), e_i]_chibar on every basis pair.
CheckReport check_antisymmetry(const Braiding& b);

/// (1 (x) chi)(chi (x) 1)(1 (x) chi) = (chi (x) 1)(1 (x) chi)(chi (x) 1)
/// on every basis triple.
CheckReport check_chi_yang_baxter(const Braiding& b);

/// Left side minus right side of the deformed Jacobi identity
/// [[a, b], c] = [a, [b, c]] + [[., .], .]((1 (x) chi)(a (x) b (x) c))
/// on arity-1 elements; zero exactly where the identity holds.
Element jacobi_residual(const Braiding& b, const Element& u, const Element& v,
                        const Element& w);

/// The Jacobi obstruction operator
/// {(chi (x) 1) - (1 (x) chi)(chi (x) 1)}(1 - (1 (x) chi^2)) applied to
/// an arity-3 element.
Element jacobi_operator_image(const Braiding& b, const Element& t);

/// Sweeps the obstruction operator over all basis triples: it must
/// vanish identically exactly when the braiding is involutive (R
/// triangular), and on every triple its collapsed image must reproduce
/// -jacobi_residual, tying the operator picture to the nested
/// commutators. The note records the first nonzero witness.
CheckReport check_jacobi_operator(const Braiding& b);

/// Star conjugation compatibility for caller-supplied star tables,
/// applied antilinearly (coefficients conjugate, then the table).
/// Validates that both tables are antimultiplicative involutions
/// (throwing otherwise), classifies R as anti-real (star R = R^-1),
/// real (star R = tau R), both, or neither, verifies the action
/// compatibility h (star a) = star((star Sh) a) on generator-basis
/// pairs, and verifies the matching commutator conjugacy
/// star [a, b]_chi = [star b, star a] with chi_bar in the anti-real
/// case and chi in the real case, on every basis pair. The note
/// records the classification.
CheckReport check_star_conjugacy(const Braiding& b, const LinearMap& star_h,
                                 const LinearMap& star_a);

/// Structure constants of a braided-commutator subspace: the sigma
/// tensor components of chi and the C tensor components of the
/// commutator over the spanning basis monomials, indexed by positions
/// into the member list. closed records whether every commutator stays
/// inside the span; when it does not, c only carries the components
/// inside the span.
struct QLieData {
  int order = 0;
  std::vector<std::uint32_t> members;
  std::vector<std::string> labels;
  std::map<std::array<int, 4>, Scalar> sigma;
  std::map<std::array<int, 3>, Scalar> c;
  bool closed = true;
};

/// Reads the sigma and C tensors off the braiding over the span of the
/// given basis monomials. The span must be stable under chi (every
/// braided pair lands in span (x) span), otherwise construction aborts;
/// non-closure of the commutator is a flag, not an error. order is the
/// root-of-unity order recorded alongside the tensors.
QLieData export_qlie(const Braiding& b, const std::vector<std::uint32_t>& members, int order);

/// Re-verifies an export against the engine: the defining identity
/// e_i e_j - sigma_ij^mk e_m e_k = [e_i, e_j]_chi entrywise from the
/// exported tensors, the C components against the commutators together
/// with the closure flag, and the braid relation of the exported sigma
/// tensor on all position triples.
std::vector<CheckReport> check_qlie_export(const Braiding& b, const QLieData& d);

}  // namespace qcomm

#pragma once

#include <cstdint>
#include <optional>

#include "hopflab/modcat.hpp"

namespace hopflab {

// Right B-Galois object: a comodule algebra of the same dimension as B whose
// canonical map a (x) b -> a b_(0) (x) b_(1) is invertible and whose
// coinvariants reduce to the span of the unit.
struct GaloisObject {
  CatComoduleAlgebra carrier;
  Matrix can;  // (dim*dimB) x dim^2
};

// can = (mult (x) B)(A (x) coaction).
Matrix canonical_map(const Context& ctx, const CatHopf& b, const CatComoduleAlgebra& a);

// Column basis of the kernel of (coaction - id (x) unit).
Matrix coinvariants(const CatHopf& b, const CatComodule& m);

struct GaloisCheck {
  AxiomReport report;
  std::optional<GaloisObject> object;  // present iff report.ok()
};
GaloisCheck is_galois(const Context& ctx, const CatHopf& b, const CatComoduleAlgebra& a);

// B with its own comultiplication as coaction; the identity of the group law.
GaloisObject regular_galois(const Context& ctx, const CatHopf& b);

// Left coaction Phi^{-1}_{B,A} o rho, turning a right comodule algebra into a
// left one when the monodromy with B vanishes.
Matrix left_coaction(const Context& ctx, const CatHopf& b, const CatComoduleAlgebra& a);

// Cotensor product Xable over B: the kernel of rho_X (x) Y - X (x) lambda_Y
// inside X (x) Y, with the restricted componentwise product and the coaction
// on the right leg.  Requires B cocommutative in the category and trivial
// monodromy between the two carriers; throws BadParams when a hypothesis
// fails and ClosureFailure when a restriction leaves the kernel.
GaloisObject cotensor(const Context& ctx, const CatHopf& b, const GaloisObject& x,
                      const GaloisObject& y);

// Opposite multiplication through the braiding, coaction composed with the
// antipode on the B leg; the inverse for the cotensor group law.
GaloisObject opposite_galois(const Context& ctx, const CatHopf& b, const GaloisObject& x);

// f : A -> B linear over the ambient, multiplicative, unital and colinear.
AxiomReport comodule_algebra_morphism_check(const Context& ctx, const CatHopf& b, const Matrix& f,
                                            const CatComoduleAlgebra& from,
                                            const CatComoduleAlgebra& to);

// Solves the linear part (ambient linearity, colinearity, unitality) of the
// morphism equations, then searches the affine solution space for a
// multiplicative member: the unique candidate when the space is a point,
// seeded random draws plus an exhaustive sweep over small spaces otherwise.
// nullopt means undecided, not proven absence.
std::optional<Matrix> find_comodule_algebra_morphism(const Context& ctx, const CatHopf& b,
                                                     const CatComoduleAlgebra& from,
                                                     const CatComoduleAlgebra& to,
                                                     std::uint64_t seed = 0);

// An invertible colinear map B -> T if one exists and None if the determinant
// vanishes on the whole solution space; the space is swept on a grid large
// enough to decide exactly.  Throws SearchBudgetExceeded when the sweep would
// pass the evaluation cap.
std::optional<Matrix> has_normal_basis(const Context& ctx, const CatHopf& b,
                                       const GaloisObject& t, std::uint64_t seed = 0);

// Bilinear form sigma on B (x) B with its convolution inverse.
struct CocycleData {
  Matrix sigma;      // dimB x dimB, sigma(e_i (x) e_j)
  Matrix sigma_inv;
};

// Solves sigma * q = counit (x) counit in the braided convolution algebra of
// forms on B (x) B and verifies the reverse order too; nothing when sigma has
// no two-sided inverse.
std::optional<Matrix> convolution_inverse_form(const Context& ctx, const CatHopf& b,
                                               const Matrix& sigma);

// Normalization, linearity over the ambient, convolution invertibility and
// the classical two-cocycle identity (the braided identity degenerates to it
// for a cocommutative B with symmetric self-braiding, which is also checked).
AxiomReport check_cocycle(const Context& ctx, const CatHopf& b, const CocycleData& s);

// B with multiplication sigma(h_1 (x) k_1~) h_2~ k_2 (middle legs braided)
// and unit sigma^{-1}(1 (x) 1) 1; coaction is the comultiplication.
GaloisObject cocycle_twist(const Context& ctx, const CatHopf& b, const CocycleData& s);

// {x in M : left(a (x) x) = right(braid(a (x) x)) for all a}, as a column
// basis.  left is M <- A (x) M, right is M <- M (x) A.
Matrix centralizer(const Context& ctx, const CatAlgebra& a, const Module& m,
                   const Matrix& left_action, const Matrix& right_action);

// F(a (x) b) : x -> (a x~) b~ and G(b (x) a) : x -> b~ (x~ a), as matrices
// onto End(carrier) with row-major flattening; both must be invertible.
AxiomReport azumaya_check(const Context& ctx, const CatAlgebra& a);

// (A # H)^A for an Azumaya module algebra A: the centralizer of A in the
// smash product under left multiplication and right smash multiplication by
// a # 1, carrying the restrictions of the smash product and of A (x) Delta.
// Throws NotAzumaya, ClosureFailure on a failed restriction, and Error if
// the result fails the Galois axioms.
struct UpsilonResult {
  GaloisObject object;
  Matrix inclusion;  // (dimA*dimH) x dim of the centralizer into A # H
};
UpsilonResult upsilon(const Context& ctx, const CatHopf& b, const CatModuleAlgebra& a);

// Round trip T -> T # B* -> ((T # B*) # B)^(T # B*) -> T: builds the dual
// smash, applies upsilon, and verifies that gamma = (T (x) counit (x) counit)
// restricted along the inclusion is an invertible comodule algebra morphism
// back to T.
AxiomReport gamma_roundtrip(const Context& ctx, const CatHopf& b, const CatComoduleAlgebra& t);

}  // namespace hopflab

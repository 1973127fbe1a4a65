#pragma once

#include "hopflab/context.hpp"

namespace hopflab {

// Invertible element of H (x) H, stored sparse; the inverse is computed and
// verified at construction.
struct RMatrix {
  HopfPtr hopf;
  SVec element;
  SVec inverse;

  static RMatrix make(HopfPtr hopf, const SVec& element);  // throws NotInvertible
};

// Quasi-triangularity of r: the two coproduct laws
// (Delta (x) id)r = r13 r23 and (id (x) Delta)r = r13 r12, the counit laws,
// the intertwiner r Delta(h) = Delta^op(h) r on every basis element, and
// invertibility of r in H (x) H.
AxiomReport check_qt(const Hopf& h, const SVec& r);

// tau(r) * r = 1 (x) 1: the induced braiding is a symmetry.
bool is_triangular(const Hopf& h, const SVec& r);

// Braiding matrix on a pair of modules.  The inverse is built from the
// antipode-inverse form and checked against the forward matrix.
struct BraidingOp {
  Matrix matrix;   // (dimN*dimM) x (dimM*dimN)
  Matrix inverse;  // (dimM*dimN) x (dimN*dimM)
};
BraidingOp braiding_matrix(const RMatrix& r, const Module& m, const Module& n);

// Does phi_mn : M (x) N -> N (x) M commute with the diagonal action of the
// bialgebra (b, comult_b)?  The diagonal action crosses b past the first
// factor with the ambient braiding of ctx; act_m, act_n are the b-actions.
AxiomCheck check_h_linearity(const Context& ctx, const Matrix& phi_mn, const Module& b,
                             const Matrix& comult_b, const Module& m, const Matrix& act_m,
                             const Module& n, const Matrix& act_n);

// Monodromy triviality: phi_nm * phi_mn = id.
bool check_symmetric_pair(const Matrix& phi_mn, const Matrix& phi_nm);

// Cocommutativity with respect to the given self-braiding: phi_hh * comult = comult.
bool check_cocommutative(const Matrix& comult, const Matrix& phi_hh);
inline bool check_cocommutative(const Hopf& h, const Matrix& phi_hh) {
  return check_cocommutative(h.comult, phi_hh);
}

}  // namespace hopflab

#pragma once

#include <optional>
#include <vector>

#include "hopflab/modcat.hpp"

namespace hopflab {

// Parameters for the graded pointed family: a grouplike of order 2m, n odd
// weights d_i in [1, 2m), and an optional quasi-triangular index s.
struct HndParams {
  long n = 0;
  long m = 1;
  std::vector<long> d;
  std::optional<long> s;
};

// K[Z_2m] with grouplike generator g, S(g) = g^{-1}.
Hopf group_hopf(long m, const Field& f);

// (1/2m) sum_{j,t} omega^{-jt} g^j (x) g^{st}: a quasi-triangular element of
// the group algebra for every s in [0, 2m).
SVec r_s(long m, long s, const Field& f);

// The same element pushed along the group-like part of hnd(p, f).
SVec r_s_embedded(const HndParams& p, const Field& f, long s);

// The pointed Hopf algebra on g, x_1..x_n with g^{2m} = 1, x_i^2 = 0,
// g x_i = omega^{d_i} x_i g, anticommuting x's, Delta(x_i) = 1 (x) x_i +
// x_i (x) g^m, S(x_i) = -x_i g^m.  Basis monomials g^j x_S ordered
// g-exponent major, subset bitmask minor.
Hopf hnd(const HndParams& p, const Field& f);

// All s in [0, 2m) with s d_i = m (mod 2m) for every i; these are exactly the
// indices whose r_s stays quasi-triangular on the whole algebra.
std::vector<long> qt_congruence(const HndParams& p);

// Generator indices i < n (1-based) with d_i = -d_n (mod 2m): the slots where
// the ambient odd generators may act nontrivially on a quadratic object.
std::vector<long> admissible_indices(const HndParams& p);

// Dimension of the additive parameter group at level n: the number of
// admissible indices, plus one when d_n = m.
long gal_group_dimension(const HndParams& p);

// Working data for level n: the ambient H(n-1, d') braided by the lifted r_s,
// and the line B = K[x_n]/(x_n^2) inside its module category.
struct FamilySetting {
  HndParams params;
  HopfPtr ambient;
  Context ctx;
  CatHopf line;
};
FamilySetting family_setting(const HndParams& p, const Field& f);

// Just the line of family_setting.
CatHopf braided_line(const HndParams& p, const Field& f);

// The isomorphism H(n,d) -> B x H(n-1, d') determined on generators by
// g -> 1 x g, x_i -> 1 x x_i for i < n, and x_n -> x (x) g^m.
struct PsiIso {
  Hopf source;
  FamilySetting setting;
  Biproduct target;
  Matrix psi;
};
PsiIso psi_iso(const HndParams& p, const Field& f);

// C(a; alpha): basis {u, w} with w^2 = a u, g.w = omega^{d_n} w,
// x_i.w = alpha_i u, coaction rho(w) = u (x) x_n + w (x) 1.  alpha must
// vanish outside the admissible indices and a must vanish unless d_n = m.
CatComoduleAlgebra c_object(const FamilySetting& fs, const Scalar& a,
                            const std::vector<Scalar>& alpha);

// The normalized parameters of a two-dimensional comodule algebra over the
// line; inverse to c_object on Galois objects, and additive under cotensor.
struct CParams {
  Scalar a;
  std::vector<Scalar> alpha;
};
CParams galois_invariant(const FamilySetting& fs, const CatComoduleAlgebra& t);

}  // namespace hopflab

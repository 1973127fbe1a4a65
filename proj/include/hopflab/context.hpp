#pragma once

#include "hopflab/module.hpp"

namespace hopflab {

// Ambient braided category of modules over a quasi-triangular Hopf algebra L.
// Every braided construction in the library is written against a Context;
// plain vector spaces are the trivial context (L = K, r = 1 (x) 1), whose
// braiding degenerates to the flip.
struct Context {
  HopfPtr ambient;  // L
  SVec r, r_inv;    // invertible element of L (x) L

  const Field& field() const { return ambient->field; }
  bool is_trivial() const { return ambient->dim == 1; }

  static Context trivial(const Field& f);
  // Computes r_inv by solving in L (x) L; throws NotInvertible.
  static Context with_r(HopfPtr ambient, const SVec& r);

  // Object of the category with trivial L-action.
  Module vec_object(long dim) const;

  // Phi_{M,N} : M (x) N -> N (x) M,  m (x) n -> r^(2).n (x) r^(1).m.
  SVec braid(const Module& m, const Module& n, const SVec& v) const;
  // Phi_{M,N}^{-1} : N (x) M -> M (x) N, via r_inv.
  SVec braid_inv(const Module& m, const Module& n, const SVec& v) const;

  Matrix braiding(const Module& m, const Module& n) const;
  Matrix braiding_inverse(const Module& m, const Module& n) const;
};

}  // namespace hopflab

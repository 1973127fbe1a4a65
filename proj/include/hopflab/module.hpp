#pragma once

#include "hopflab/hopf.hpp"

namespace hopflab {

// Left module over an ordinary Hopf algebra: action is dim x (H.dim * dim).
struct Module {
  HopfPtr over;
  long dim = 0;
  Matrix action;

  Matrix act_of_basis(long h) const;         // dim x dim action of e_h
  Matrix act_of(const SVec& elem) const;
};

// Right comodule: coaction is (dim * H.dim) x dim,  m -> m_(0) (x) m_(1).
struct Comodule {
  HopfPtr over;
  long dim = 0;
  Matrix coaction;
};

AxiomReport verify_module(const Module& m);
AxiomReport verify_comodule(const Comodule& c);

Module trivial_module(HopfPtr h, long dim);
Module regular_module(HopfPtr h);
// Diagonal action through Delta with the flip (modules over an ordinary Hopf
// algebra, crossing in Vec).
Module tensor_module(const Module& a, const Module& b);
// Dual module: h acts by the transpose of the S(h)-action.
Module dual_module(const Module& m);

// f : M -> N commutes with the action.
AxiomReport module_morphism_check(const Matrix& f, const Module& m, const Module& n);

bool same_hopf(const HopfPtr& a, const HopfPtr& b);

}  // namespace hopflab

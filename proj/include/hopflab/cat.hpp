#pragma once

#include "hopflab/context.hpp"

namespace hopflab {

// Algebra inside the ambient category: the carrier is a module over the
// context's Hopf algebra.  Structure maps are expected to be module morphisms;
// the verifiers check this, the constructors do not.
struct CatAlgebra {
  Module carrier;
  Matrix mult;  // dim x dim^2
  Matrix unit;  // dim x 1

  long dim() const { return carrier.dim; }
  Algebra plain() const;
};

struct CatCoalgebra {
  Module carrier;
  Matrix comult;  // dim^2 x dim
  Matrix counit;  // 1 x dim

  long dim() const { return carrier.dim; }
  Coalgebra plain() const;
};

// Hopf algebra inside the ambient category; the bialgebra compatibility is
// taken with respect to the context braiding on the carrier.
struct CatHopf {
  Module carrier;
  Matrix mult, unit, comult, counit, antipode;

  long dim() const { return carrier.dim; }
  CatAlgebra algebra() const { return CatAlgebra{carrier, mult, unit}; }
  CatCoalgebra coalgebra() const { return CatCoalgebra{carrier, comult, counit}; }
  Hopf plain() const;
};

// Left module over a CatAlgebra whose carrier is itself an object of the
// ambient category; action is algebra-index major as in Module.
struct CatModule {
  Module carrier;
  Matrix action;  // dim x (alg.dim * dim)
};

// Right comodule over a CatCoalgebra.
struct CatComodule {
  Module carrier;
  Matrix coaction;  // (dim * coalg.dim) x dim
};

struct CatModuleAlgebra {
  CatAlgebra alg;
  Matrix action;
};

struct CatComoduleAlgebra {
  CatAlgebra alg;
  Matrix coaction;
};

AxiomReport verify_cat_algebra(const Context& ctx, const CatAlgebra& a);
AxiomReport verify_cat_coalgebra(const Context& ctx, const CatCoalgebra& c);
AxiomReport verify_cat_hopf(const Context& ctx, const CatHopf& h);
AxiomReport verify_cat_module(const Context& ctx, const CatAlgebra& a, const CatModule& m);
AxiomReport verify_cat_comodule(const Context& ctx, const CatCoalgebra& c, const CatComodule& m);
// Module axioms plus h.(ab) = (h_1.a~)(h_2~.b) through the braiding and
// h.1 = eps(h)1.
AxiomReport verify_cat_module_algebra(const Context& ctx, const CatHopf& h,
                                      const CatModuleAlgebra& a);
// Comodule axioms plus rho multiplicative into the braided tensor algebra
// A (x) H and rho(1) = 1 (x) 1.
AxiomReport verify_cat_comodule_algebra(const Context& ctx, const CatHopf& h,
                                        const CatComoduleAlgebra& a);

// mult o Phi_{A,A} = mult, and the dual condition on the comultiplication.
bool cat_commutative(const Context& ctx, const CatAlgebra& a);
bool cat_cocommutative(const Context& ctx, const CatCoalgebra& c);

// A (x) B with the multiplication braided past the middle legs.
CatAlgebra cat_tensor_algebra(const Context& ctx, const CatAlgebra& a, const CatAlgebra& b);
// Multiplication precomposed with the self-braiding.
CatAlgebra cat_opposite(const Context& ctx, const CatAlgebra& a);

// Ordinary structures as objects with trivial ambient action.
CatAlgebra as_cat(const Context& ctx, const Algebra& a);
CatHopf as_cat(const Context& ctx, const Hopf& h);

// Dual Hopf algebra [H, K] inside the category.  The carrier is the dual
// module; multiplication pairs with the comultiplication through the braiding
// Phi_{H*,H}, the comultiplication solves the mirrored pairing relation
// against the multiplication.  Throws NotInvertible if that pairing is
// degenerate (it cannot be for an invertible braiding).
CatHopf dual_cat_hopf(const Context& ctx, const CatHopf& h);

}  // namespace hopflab

#pragma once

#include <memory>
#include <optional>

#include "hopflab/report.hpp"
#include "hopflab/sparse.hpp"

namespace hopflab {

// Finite-dimensional algebra over K by structure constants.
// mult is dim x dim^2 (columns indexed by basis pairs, first factor major),
// unit is dim x 1.
struct Algebra {
  Field field;
  long dim = 0;
  Matrix mult;
  Matrix unit;
};

// comult is dim^2 x dim, counit is 1 x dim.
struct Coalgebra {
  Field field;
  long dim = 0;
  Matrix comult;
  Matrix counit;
};

struct Hopf {
  Field field;
  long dim = 0;
  Matrix mult, unit, comult, counit, antipode;

  Algebra algebra() const { return Algebra{field, dim, mult, unit}; }
  Coalgebra coalgebra() const { return Coalgebra{field, dim, comult, counit}; }
};

using HopfPtr = std::shared_ptr<const Hopf>;

// Cached column-sparse multiplication, including in tensor powers A^(x)k
// where basis tensors multiply leg by leg.
class AlgebraOps {
 public:
  AlgebraOps(const Matrix& mult, const Matrix& unit);
  explicit AlgebraOps(const Algebra& a) : AlgebraOps(a.mult, a.unit) {}
  explicit AlgebraOps(const Hopf& h) : AlgebraOps(h.mult, h.unit) {}

  long dim() const { return dim_; }
  SVec unit_elem() const;
  SVec basis_product(long i, long j) const { return mult_cols_.col[i * dim_ + j]; }
  SVec product(const SVec& u, const SVec& v) const { return power_product(1, u, v); }
  SVec power_product(int k, const SVec& u, const SVec& v) const;
  SVec power_unit(int k) const;
  Matrix left_mult(const SVec& u) const;
  Matrix power_left_mult(int k, const SVec& u) const;
  // Two-sided inverse of u in A^(x)k, or nothing.
  std::optional<SVec> power_inverse(int k, const SVec& u) const;

 private:
  long dim_;
  Field field_;
  SparseCols mult_cols_;
  SVec unit_;
};

AxiomReport verify_algebra(const Algebra& a);
AxiomReport verify_coalgebra(const Coalgebra& c);
// Full Hopf axioms.  `middle` is the crossing used in the bialgebra
// compatibility Delta(ab) = Delta(a) Delta(b); defaults to the flip.
AxiomReport verify_hopf(const Hopf& h, const SparseCols* middle = nullptr);

// Dual Hopf algebra of an ordinary Hopf algebra (flip crossing): structure
// maps are the transposes of the originals.
Hopf dual_hopf(const Hopf& h);

// Opposite multiplication through the given crossing A(x)A -> A(x)A.
Algebra opposite_algebra(const Algebra& a, const SparseCols& crossing);

// f must be a bialgebra map intertwining antipodes; square dim_to x dim_from.
AxiomReport hopf_morphism_check(const Matrix& f, const Hopf& from, const Hopf& to);

Matrix antipode_inverse(const Hopf& h);

}  // namespace hopflab

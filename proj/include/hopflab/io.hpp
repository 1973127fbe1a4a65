#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopflab/cat.hpp"
#include "hopflab/hopf.hpp"
#include "hopflab/report.hpp"

namespace hopflab {

// Raw sparse tensor entry as written on disk: domain indices first, codomain
// indices last, exact coefficient.
struct SparseEntry {
  std::vector<long> idx;
  Scalar value;
};

// On-disk description of an algebra-like structure.  mult and unit are
// required; the optional blocks carry whatever extra structure the file
// describes.  The action/baction/coaction triples stay raw because one of
// their index ranges belongs to a companion file whose dimension is only
// known later.
//
// Entry layouts (indices 0-based, omitted entries zero, scalars as strings):
//   mult      [[i,j,k,c]]   e_i e_j has coefficient c on e_k
//   unit      [[k,c]]
//   comult    [[i,j,k,c]]   Delta(e_i) has c on e_j (x) e_k
//   counit    [[i,c]]
//   antipode  [[i,j,c]]     S(e_i) has c on e_j
//   rmatrix   [[i,j,c]]     c on e_i (x) e_j
//   action    [[h,m,m',c]]  e_h . e_m has c on e_m'
//   baction   [[h,m,m',c]]  a second action in the same layout
//   coaction  [[m,m',h,c]]  rho(e_m) has c on e_m' (x) e_h
struct AlgebraFile {
  Field field;
  std::string name;
  long dim = 0;
  Matrix mult;
  Matrix unit;
  std::optional<Matrix> comult, counit, antipode;
  std::optional<SVec> rmatrix;
  std::vector<SparseEntry> action, baction, coaction;
  bool has_action = false, has_baction = false, has_coaction = false;

  AlgebraFile() : mult(Field::rationals(), 0, 0), unit(Field::rationals(), 0, 0) {}
};

// Parse/serialize; all failures surface as BadInput.
AlgebraFile parse_algebra_file(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);
std::string emit_algebra_file(const AlgebraFile& af);
void write_algebra_file(const std::string& path, const AlgebraFile& af);

// Structure views.  to_hopf needs all five maps; rmatrix_of needs rmatrix.
Hopf to_hopf(const AlgebraFile& af);
Algebra to_algebra(const AlgebraFile& af);
SVec rmatrix_of(const AlgebraFile& af);
// Shape the raw triples against the companion dimension; BadInput when a
// block is absent or an index is out of range.
Matrix action_matrix(const AlgebraFile& af, long dim_h);
Matrix baction_matrix(const AlgebraFile& af, long dim_h);
Matrix coaction_matrix(const AlgebraFile& af, long dim_h);

// Builders for emission.
AlgebraFile from_hopf(const Hopf& h, const std::string& name);
AlgebraFile from_algebra(const Algebra& a, const std::string& name);
// Carrier action goes to "action", the coaction to "coaction": the shape the
// galois subcommands exchange.
AlgebraFile from_comodule_algebra(const CatComoduleAlgebra& t, const std::string& name);
// Five structure maps plus the carrier action under "action".
AlgebraFile from_cat_hopf(const CatHopf& b, const std::string& name);

// Cocycle input {"field", "dim", "sigma": [[i,j,c]...], "sigma_inv"?: ...}.
struct CocycleFile {
  Field field;
  long dim = 0;
  Matrix sigma;
  std::optional<Matrix> sigma_inv;

  CocycleFile() : sigma(Field::rationals(), 0, 0) {}
};
CocycleFile parse_cocycle_file(const std::string& text);
CocycleFile load_cocycle_file(const std::string& path);

// {"check","pass","details":[{"axiom","pass","witness"?}...],"witness"?,
//  "seed","versions":{"format":1}}; key order fixed, output deterministic.
std::string report_json(const std::string& check, const AxiomReport& rep, long long seed);

}  // namespace hopflab

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopflab/matrix.hpp"

namespace hopflab {

// Sparse vector over a flattened tensor basis: sorted by index, no zero terms,
// no duplicate indices.  Used for element arithmetic in tensor powers where
// dense Kronecker products would be too large.
using SVec = std::vector<std::pair<long, Scalar>>;

void sv_normalize(SVec& v);
SVec sv_term(long idx, Scalar c);
SVec sv_add(const SVec& a, const SVec& b);
SVec sv_sub(const SVec& a, const SVec& b);
SVec sv_scale(const Scalar& c, const SVec& v);
bool sv_equal(const SVec& a, const SVec& b);
bool sv_is_zero(const SVec& v);
std::string sv_str(const SVec& v);

Matrix sv_to_column(const Field& f, long dim, const SVec& v);
SVec column_to_sv(const Matrix& m, long col);
Matrix columns_to_matrix(const Field& f, long dim, const std::vector<SVec>& cols);

// u (x) v with v living in a space of dimension dim_v.
SVec sv_tensor(const SVec& u, const SVec& v, long dim_v);

long flat_index(const std::vector<long>& legs, const std::vector<long>& idx);
void split_index(const std::vector<long>& legs, long flat, std::vector<long>& out);

// Column-sparse view of a matrix, for applying it to sparse vectors.
struct SparseCols {
  long rows = 0, cols = 0;
  std::vector<SVec> col;
};
SparseCols sparse_cols(const Matrix& m);
SparseCols sparse_flip(const Field& f, long dim_a, long dim_b);
SVec apply_sparse(const SparseCols& m, const SVec& v);
SVec apply_dense(const Matrix& m, const SVec& v);

// Apply m to legs [first, first+count) of v, whose factors have dimensions
// `legs`; m maps that sub-tensor onto factors of dimensions `out_dims`.
// Updates `legs` in place.
SVec apply_on_legs(const SparseCols& m, std::vector<long>& legs, int first, int count,
                   const std::vector<long>& out_dims, const SVec& v);
SVec apply_on_legs(const Matrix& m, std::vector<long>& legs, int first, int count,
                   const std::vector<long>& out_dims, const SVec& v);

}  // namespace hopflab

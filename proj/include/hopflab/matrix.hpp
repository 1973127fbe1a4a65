#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopflab/field.hpp"

namespace hopflab {

// Dense matrix over an exact field.  Linear maps f : V -> W are (dim W) x
// (dim V) matrices acting on column vectors; composition is matrix product.
// Tensor-product bases are flattened first-factor-major: (i, j) -> i * dimB + j.
class Matrix {
 public:
  Matrix() : field_(Field::rationals()) {}
  Matrix(Field f, long rows, long cols);

  static Matrix identity(const Field& f, long n);
  static Matrix zero(const Field& f, long rows, long cols) { return Matrix(f, rows, cols); }
  static Matrix column(const Field& f, const std::vector<Scalar>& entries);
  static Matrix row_major(const Field& f, long rows, long cols, const std::vector<Scalar>& entries);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(long r, long c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Scalar& at(long r, long c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;

  std::string str() const;

 private:
  Field field_;
  long rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Kronecker product; matches the first-factor-major flattening of tensor bases.
Matrix kron(const Matrix& a, const Matrix& b);
// Flip map A (x) B -> B (x) A on spaces of the given dimensions.
Matrix flip_map(const Field& f, long dim_a, long dim_b);

struct Echelon {
  Matrix reduced;            // reduced row echelon form
  std::vector<long> pivots;  // pivot column per pivot row
  long rank = 0;
};
Echelon echelon_form(Matrix m);

long rank(const Matrix& m);
// Columns form the reduced-echelon basis of the null space, ordered by free
// column index; deterministic.
Matrix kernel(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// One solution X of A X = B (free variables set to zero), or nullopt if
// inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

}  // namespace hopflab

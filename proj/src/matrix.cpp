#include "hopflab/matrix.hpp"

#include <sstream>

#include "hopflab/errors.hpp"

namespace hopflab {

Matrix::Matrix(Field f, long rows, long cols) : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimMismatch("negative matrix dimension");
  a_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(field_));
}

Matrix Matrix::identity(const Field& f, long n) {
  Matrix m(f, n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::column(const Field& f, const std::vector<Scalar>& entries) {
  Matrix m(f, static_cast<long>(entries.size()), 1);
  for (long i = 0; i < m.rows(); ++i) m.at(i, 0) = entries[i];
  return m;
}

Matrix Matrix::row_major(const Field& f, long rows, long cols, const std::vector<Scalar>& entries) {
  if (static_cast<long>(entries.size()) != rows * cols)
    throw DimMismatch("entry count does not match shape");
  Matrix m(f, rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m.at(r, c) = entries[static_cast<size_t>(r) * cols + c];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix product");
  if (cols_ != o.rows_) throw DimMismatch("matrix product " + std::to_string(cols_) + " vs " +
                                          std::to_string(o.rows_));
  Matrix out(field_, rows_, o.cols_);
  for (long r = 0; r < rows_; ++r)
    for (long k = 0; k < cols_; ++k) {
      const Scalar& v = at(r, k);
      if (v.is_zero()) continue;
      for (long c = 0; c < o.cols_; ++c) {
        const Scalar& w = o.at(k, c);
        if (!w.is_zero()) out.at(r, c) += v * w;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix sum");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix sum");
  Matrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix difference");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix difference");
  Matrix out = *this;
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& v : out.a_) v *= s;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return a_ == o.a_;
}

bool Matrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) {
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
    }
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (long r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " [");
    for (long c = 0; c < cols_; ++c) os << (c == 0 ? "" : ", ") << at(r, c).str();
    os << "]" << (r + 1 < rows_ ? "\n" : "");
  }
  os << "]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("kron");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (long ra = 0; ra < a.rows(); ++ra)
    for (long ca = 0; ca < a.cols(); ++ca) {
      const Scalar& v = a.at(ra, ca);
      if (v.is_zero()) continue;
      for (long rb = 0; rb < b.rows(); ++rb)
        for (long cb = 0; cb < b.cols(); ++cb) {
          const Scalar& w = b.at(rb, cb);
          if (!w.is_zero()) out.at(ra * b.rows() + rb, ca * b.cols() + cb) = v * w;
        }
    }
  return out;
}

Matrix flip_map(const Field& f, long dim_a, long dim_b) {
  Matrix out(f, dim_a * dim_b, dim_a * dim_b);
  for (long i = 0; i < dim_a; ++i)
    for (long j = 0; j < dim_b; ++j) out.at(j * dim_a + i, i * dim_b + j) = Scalar::one(f);
  return out;
}

Echelon echelon_form(Matrix m) {
  Echelon e{Matrix(), {}, 0};
  long rows = m.rows(), cols = m.cols();
  long pr = 0;
  for (long c = 0; c < cols && pr < rows; ++c) {
    long piv = -1;
    for (long r = pr; r < rows; ++r) {
      if (!m.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != pr)
      for (long k = 0; k < cols; ++k) std::swap(m.at(piv, k), m.at(pr, k));
    Scalar inv = m.at(pr, c).inverse();
    for (long k = c; k < cols; ++k) m.at(pr, k) *= inv;
    for (long r = 0; r < rows; ++r) {
      if (r == pr) continue;
      Scalar v = m.at(r, c);
      if (v.is_zero()) continue;
      for (long k = c; k < cols; ++k) m.at(r, k) -= v * m.at(pr, k);
    }
    e.pivots.push_back(c);
    ++pr;
  }
  e.rank = pr;
  e.reduced = std::move(m);
  return e;
}

long rank(const Matrix& m) { return echelon_form(m).rank; }

Matrix kernel(const Matrix& m) {
  Echelon e = echelon_form(m);
  long cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (long c : e.pivots) is_pivot[c] = true;
  std::vector<long> free_cols;
  for (long c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix out(m.field(), cols, static_cast<long>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    long fc = free_cols[k];
    out.at(fc, static_cast<long>(k)) = Scalar::one(m.field());
    for (long pr = 0; pr < e.rank; ++pr)
      out.at(e.pivots[pr], static_cast<long>(k)) = -e.reduced.at(pr, fc);
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimMismatch("inverse of non-square matrix");
  long n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.field());
  }
  Echelon e = echelon_form(std::move(aug));
  if (e.rank < n || e.pivots[n - 1] >= n) {
    if (e.rank < n) return std::nullopt;
  }
  for (long i = 0; i < n; ++i)
    if (i >= static_cast<long>(e.pivots.size()) || e.pivots[i] != i) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) out.at(r, c) = e.reduced.at(r, n + c);
  return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("solve");
  if (a.rows() != b.rows()) throw DimMismatch("solve: row counts differ");
  long n = a.cols(), k = b.cols();
  Matrix aug(a.field(), a.rows(), n + k);
  for (long r = 0; r < a.rows(); ++r) {
    for (long c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    for (long c = 0; c < k; ++c) aug.at(r, n + c) = b.at(r, c);
  }
  Echelon e = echelon_form(std::move(aug));
  // Any pivot in the augmented block means inconsistency.
  for (long pr = 0; pr < e.rank; ++pr)
    if (e.pivots[pr] >= n) return std::nullopt;
  Matrix out(a.field(), n, k);
  for (long pr = 0; pr < e.rank; ++pr)
    for (long c = 0; c < k; ++c) out.at(e.pivots[pr], c) = e.reduced.at(pr, n + c);
  return out;
}

}  // namespace hopflab

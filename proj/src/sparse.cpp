#include "hopflab/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hopflab/errors.hpp"

namespace hopflab {

void sv_normalize(SVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.second.is_zero(); }),
            out.end());
  v = std::move(out);
}

SVec sv_term(long idx, Scalar c) {
  if (c.is_zero()) return {};
  return {{idx, std::move(c)}};
}

SVec sv_add(const SVec& a, const SVec& b) {
  SVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      out.push_back(a[i++]);
    else if (b[j].first < a[i].first)
      out.push_back(b[j++]);
    else {
      Scalar s = a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

namespace {
SVec sv_negate(const SVec& v) {
  SVec out = v;
  for (auto& t : out) t.second = -t.second;
  return out;
}
}  // namespace

SVec sv_sub(const SVec& a, const SVec& b) { return sv_add(a, sv_negate(b)); }

SVec sv_scale(const Scalar& c, const SVec& v) {
  if (c.is_zero()) return {};
  SVec out = v;
  for (auto& t : out) t.second *= c;
  return out;
}

bool sv_equal(const SVec& a, const SVec& b) { return a == b; }

bool sv_is_zero(const SVec& v) { return v.empty(); }

std::string sv_str(const SVec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << " + ";
    os << v[i].second.str() << "*e" << v[i].first;
  }
  return os.str();
}

Matrix sv_to_column(const Field& f, long dim, const SVec& v) {
  Matrix m(f, dim, 1);
  for (const auto& t : v) m.at(t.first, 0) = t.second;
  return m;
}

SVec column_to_sv(const Matrix& m, long col) {
  SVec v;
  for (long r = 0; r < m.rows(); ++r)
    if (!m.at(r, col).is_zero()) v.emplace_back(r, m.at(r, col));
  return v;
}

Matrix columns_to_matrix(const Field& f, long dim, const std::vector<SVec>& cols) {
  Matrix m(f, dim, static_cast<long>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& t : cols[c]) m.at(t.first, static_cast<long>(c)) = t.second;
  return m;
}

SVec sv_tensor(const SVec& u, const SVec& v, long dim_v) {
  SVec out;
  out.reserve(u.size() * v.size());
  for (const auto& a : u)
    for (const auto& b : v) out.emplace_back(a.first * dim_v + b.first, a.second * b.second);
  sv_normalize(out);
  return out;
}

long flat_index(const std::vector<long>& legs, const std::vector<long>& idx) {
  long flat = 0;
  for (size_t i = 0; i < legs.size(); ++i) flat = flat * legs[i] + idx[i];
  return flat;
}

void split_index(const std::vector<long>& legs, long flat, std::vector<long>& out) {
  out.assign(legs.size(), 0);
  for (size_t i = legs.size(); i-- > 0;) {
    out[i] = flat % legs[i];
    flat /= legs[i];
  }
}

SparseCols sparse_cols(const Matrix& m) {
  SparseCols s;
  s.rows = m.rows();
  s.cols = m.cols();
  s.col.resize(m.cols());
  for (long c = 0; c < m.cols(); ++c) s.col[c] = column_to_sv(m, c);
  return s;
}

SparseCols sparse_flip(const Field& f, long dim_a, long dim_b) {
  SparseCols s;
  s.rows = s.cols = dim_a * dim_b;
  s.col.resize(s.cols);
  Scalar one = Scalar::one(f);
  for (long i = 0; i < dim_a; ++i)
    for (long j = 0; j < dim_b; ++j) s.col[i * dim_b + j] = sv_term(j * dim_a + i, one);
  return s;
}

SVec apply_sparse(const SparseCols& m, const SVec& v) {
  SVec out;
  for (const auto& t : v) {
    if (t.first < 0 || t.first >= m.cols) throw DimMismatch("apply_sparse index out of range");
    for (const auto& e : m.col[t.first]) out.emplace_back(e.first, e.second * t.second);
  }
  sv_normalize(out);
  return out;
}

SVec apply_dense(const Matrix& m, const SVec& v) {
  SVec out;
  for (long r = 0; r < m.rows(); ++r) {
    Scalar acc = Scalar::zero(m.field());
    for (const auto& t : v) {
      const Scalar& w = m.at(r, t.first);
      if (!w.is_zero()) acc += w * t.second;
    }
    if (!acc.is_zero()) out.emplace_back(r, std::move(acc));
  }
  return out;
}

SVec apply_on_legs(const SparseCols& m, std::vector<long>& legs, int first, int count,
                   const std::vector<long>& out_dims, const SVec& v) {
  long before = 1, mid = 1, after = 1;
  for (int i = 0; i < first; ++i) before *= legs[i];
  for (int i = first; i < first + count; ++i) mid *= legs[i];
  for (size_t i = first + count; i < legs.size(); ++i) after *= legs[i];
  if (m.cols != mid) throw DimMismatch("apply_on_legs: map expects " + std::to_string(m.cols) +
                                       ", legs give " + std::to_string(mid));
  long out_mid = 1;
  for (long d : out_dims) out_mid *= d;
  if (m.rows != out_mid) throw DimMismatch("apply_on_legs: output dims inconsistent");

  SVec out;
  for (const auto& t : v) {
    long aft = t.first % after;
    long rest = t.first / after;
    long sub = rest % mid;
    long bef = rest / mid;
    for (const auto& e : m.col[sub])
      out.emplace_back((bef * out_mid + e.first) * after + aft, e.second * t.second);
  }
  sv_normalize(out);

  std::vector<long> new_legs(legs.begin(), legs.begin() + first);
  for (long d : out_dims) new_legs.push_back(d);
  for (size_t i = first + count; i < legs.size(); ++i) new_legs.push_back(legs[i]);
  legs = std::move(new_legs);
  return out;
}

SVec apply_on_legs(const Matrix& m, std::vector<long>& legs, int first, int count,
                   const std::vector<long>& out_dims, const SVec& v) {
  return apply_on_legs(sparse_cols(m), legs, first, count, out_dims, v);
}

}  // namespace hopflab

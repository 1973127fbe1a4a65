#include "hopflab/context.hpp"

#include "hopflab/errors.hpp"

namespace hopflab {

namespace {

SVec flip_pair(const SVec& v, long dim_first, long dim_second) {
  SVec out;
  out.reserve(v.size());
  for (const auto& t : v) {
    long i = t.first / dim_second, j = t.first % dim_second;
    out.emplace_back(j * dim_first + i, t.second);
  }
  sv_normalize(out);
  return out;
}

}  // namespace

Context Context::trivial(const Field& f) {
  Scalar one = Scalar::one(f);
  Matrix m1 = Matrix::identity(f, 1);
  auto l = std::make_shared<const Hopf>(Hopf{f, 1, m1, m1, m1, m1, m1});
  SVec r = sv_term(0, one);
  return Context{std::move(l), r, r};
}

Context Context::with_r(HopfPtr ambient, const SVec& r) {
  AlgebraOps ops(*ambient);
  auto inv = ops.power_inverse(2, r);
  if (!inv) throw NotInvertible("r in L (x) L");
  return Context{std::move(ambient), r, *inv};
}

Module Context::vec_object(long dim) const { return trivial_module(ambient, dim); }

SVec Context::braid(const Module& m, const Module& n, const SVec& v) const {
  if (v.empty()) return {};
  if (m.dim * n.dim == 0) return {};
  if (is_trivial()) return flip_pair(v, m.dim, n.dim);
  long ld = ambient->dim;
  SVec out;
  for (const auto& t : v) {
    long i = t.first / n.dim, j = t.first % n.dim;
    for (const auto& tr : r) {
      long a = tr.first / ld, b = tr.first % ld;
      SVec am = column_to_sv(m.action, a * m.dim + i);
      SVec bn = column_to_sv(n.action, b * n.dim + j);
      Scalar c = t.second * tr.second;
      for (const auto& tn : bn)
        for (const auto& tm : am)
          out.emplace_back(tn.first * m.dim + tm.first, c * tn.second * tm.second);
    }
  }
  sv_normalize(out);
  return out;
}

SVec Context::braid_inv(const Module& m, const Module& n, const SVec& v) const {
  if (v.empty()) return {};
  if (m.dim * n.dim == 0) return {};
  if (is_trivial()) return flip_pair(v, n.dim, m.dim);
  long ld = ambient->dim;
  SVec out;
  for (const auto& t : v) {
    long j = t.first / m.dim, i = t.first % m.dim;
    for (const auto& tr : r_inv) {
      long a = tr.first / ld, b = tr.first % ld;
      SVec am = column_to_sv(m.action, a * m.dim + i);
      SVec bn = column_to_sv(n.action, b * n.dim + j);
      Scalar c = t.second * tr.second;
      for (const auto& tm : am)
        for (const auto& tn : bn)
          out.emplace_back(tm.first * n.dim + tn.first, c * tm.second * tn.second);
    }
  }
  sv_normalize(out);
  return out;
}

Matrix Context::braiding(const Module& m, const Module& n) const {
  Scalar one = Scalar::one(field());
  std::vector<SVec> cols(m.dim * n.dim);
  for (long idx = 0; idx < m.dim * n.dim; ++idx) cols[idx] = braid(m, n, sv_term(idx, one));
  return columns_to_matrix(field(), n.dim * m.dim, cols);
}

Matrix Context::braiding_inverse(const Module& m, const Module& n) const {
  Scalar one = Scalar::one(field());
  std::vector<SVec> cols(n.dim * m.dim);
  for (long idx = 0; idx < n.dim * m.dim; ++idx) cols[idx] = braid_inv(m, n, sv_term(idx, one));
  return columns_to_matrix(field(), m.dim * n.dim, cols);
}

}  // namespace hopflab

#include "hopflab/hopf.hpp"

#include <functional>
#include <sstream>

#include "hopflab/errors.hpp"

namespace hopflab {

namespace {

void expect_shape(const Matrix& m, long rows, long cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    throw DimMismatch(what + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                      ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

std::string witness(const std::vector<long>& idx, const SVec& lhs, const SVec& rhs) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << "): lhs=" << sv_str(lhs) << ", rhs=" << sv_str(rhs);
  return os.str();
}

// Scans basis multi-indices lexicographically; records only the first failure.
struct FirstFail {
  bool pass = true;
  std::string w;
  void check(const std::vector<long>& idx, const SVec& lhs, const SVec& rhs) {
    if (pass && !sv_equal(lhs, rhs)) {
      pass = false;
      w = witness(idx, lhs, rhs);
    }
  }
};

}  // namespace

AlgebraOps::AlgebraOps(const Matrix& mult, const Matrix& unit)
    : dim_(mult.rows()), field_(mult.field()) {
  expect_shape(mult, dim_, dim_ * dim_, "mult");
  expect_shape(unit, dim_, 1, "unit");
  mult_cols_ = sparse_cols(mult);
  unit_ = column_to_sv(unit, 0);
}

SVec AlgebraOps::unit_elem() const { return unit_; }

SVec AlgebraOps::power_product(int k, const SVec& u, const SVec& v) const {
  SVec out;
  std::vector<long> iidx(k), jidx(k);
  std::vector<long> legs(k, dim_);
  for (const auto& tu : u) {
    split_index(legs, tu.first, iidx);
    for (const auto& tv : v) {
      split_index(legs, tv.first, jidx);
      SVec acc = sv_term(0, tu.second * tv.second);
      for (int leg = 0; leg < k; ++leg) {
        const SVec& prod = basis_product(iidx[leg], jidx[leg]);
        if (prod.empty()) {
          acc.clear();
          break;
        }
        acc = sv_tensor(acc, prod, dim_);
      }
      for (auto& t : acc) out.push_back(std::move(t));
    }
  }
  sv_normalize(out);
  return out;
}

SVec AlgebraOps::power_unit(int k) const {
  SVec out = sv_term(0, Scalar::one(field_));
  for (int i = 0; i < k; ++i) out = sv_tensor(out, unit_, dim_);
  return out;
}

Matrix AlgebraOps::left_mult(const SVec& u) const { return power_left_mult(1, u); }

Matrix AlgebraOps::power_left_mult(int k, const SVec& u) const {
  long n = 1;
  for (int i = 0; i < k; ++i) n *= dim_;
  std::vector<SVec> cols(n);
  for (long j = 0; j < n; ++j)
    cols[j] = power_product(k, u, sv_term(j, Scalar::one(field_)));
  return columns_to_matrix(field_, n, cols);
}

std::optional<SVec> AlgebraOps::power_inverse(int k, const SVec& u) const {
  long n = 1;
  for (int i = 0; i < k; ++i) n *= dim_;
  Matrix lm = power_left_mult(k, u);
  auto x = solve(lm, sv_to_column(field_, n, power_unit(k)));
  if (!x) return std::nullopt;
  SVec inv = column_to_sv(*x, 0);
  if (!sv_equal(power_product(k, inv, u), power_unit(k))) return std::nullopt;
  return inv;
}

AxiomReport verify_algebra(const Algebra& a) {
  AxiomReport rep;
  rep.subject = "algebra";
  expect_shape(a.mult, a.dim, a.dim * a.dim, "mult");
  expect_shape(a.unit, a.dim, 1, "unit");
  AlgebraOps ops(a);
  Scalar one = Scalar::one(a.field);

  FirstFail assoc;
  for (long i = 0; i < a.dim && assoc.pass; ++i)
    for (long j = 0; j < a.dim && assoc.pass; ++j) {
      SVec ij = ops.basis_product(i, j);
      for (long k = 0; k < a.dim && assoc.pass; ++k) {
        SVec lhs = ops.product(ij, sv_term(k, one));
        SVec rhs = ops.product(sv_term(i, one), ops.basis_product(j, k));
        assoc.check({i, j, k}, lhs, rhs);
      }
    }
  rep.add("associativity", assoc.pass, assoc.w);

  FirstFail lu, ru;
  for (long i = 0; i < a.dim; ++i) {
    SVec e = sv_term(i, one);
    lu.check({i}, ops.product(ops.unit_elem(), e), e);
    ru.check({i}, ops.product(e, ops.unit_elem()), e);
  }
  rep.add("left unit", lu.pass, lu.w);
  rep.add("right unit", ru.pass, ru.w);
  return rep;
}

AxiomReport verify_coalgebra(const Coalgebra& c) {
  AxiomReport rep;
  rep.subject = "coalgebra";
  expect_shape(c.comult, c.dim * c.dim, c.dim, "comult");
  expect_shape(c.counit, 1, c.dim, "counit");
  SparseCols dl = sparse_cols(c.comult);
  SparseCols ep = sparse_cols(c.counit);
  Scalar one = Scalar::one(c.field);

  FirstFail coassoc;
  for (long i = 0; i < c.dim && coassoc.pass; ++i) {
    SVec d = dl.col[i];
    std::vector<long> legs_l{c.dim, c.dim};
    SVec lhs = apply_on_legs(dl, legs_l, 0, 1, {c.dim, c.dim}, d);
    std::vector<long> legs_r{c.dim, c.dim};
    SVec rhs = apply_on_legs(dl, legs_r, 1, 1, {c.dim, c.dim}, d);
    coassoc.check({i}, lhs, rhs);
  }
  rep.add("coassociativity", coassoc.pass, coassoc.w);

  FirstFail lc, rc;
  for (long i = 0; i < c.dim; ++i) {
    SVec d = dl.col[i];
    std::vector<long> legs_l{c.dim, c.dim};
    SVec lhs = apply_on_legs(ep, legs_l, 0, 1, {}, d);
    lc.check({i}, lhs, sv_term(i, one));
    std::vector<long> legs_r{c.dim, c.dim};
    SVec rhs = apply_on_legs(ep, legs_r, 1, 1, {}, d);
    rc.check({i}, rhs, sv_term(i, one));
  }
  rep.add("left counit", lc.pass, lc.w);
  rep.add("right counit", rc.pass, rc.w);
  return rep;
}

AxiomReport verify_hopf(const Hopf& h, const SparseCols* middle) {
  AxiomReport rep;
  rep.subject = "hopf";
  rep.merge(verify_algebra(h.algebra()));
  rep.merge(verify_coalgebra(h.coalgebra()));
  expect_shape(h.antipode, h.dim, h.dim, "antipode");

  AlgebraOps ops(h);
  SparseCols dl = sparse_cols(h.comult);
  SparseCols ep = sparse_cols(h.counit);
  SparseCols s = sparse_cols(h.antipode);
  SparseCols flip;
  if (middle == nullptr) {
    flip = sparse_flip(h.field, h.dim, h.dim);
    middle = &flip;
  }
  Scalar one = Scalar::one(h.field);

  // Delta(a b) = Delta(a) Delta(b), multiplying in H (x) H through `middle`.
  FirstFail mlt;
  for (long i = 0; i < h.dim && mlt.pass; ++i)
    for (long j = 0; j < h.dim && mlt.pass; ++j) {
      std::vector<long> l1{h.dim};
      SVec lhs = apply_on_legs(dl, l1, 0, 1, {h.dim, h.dim}, ops.basis_product(i, j));
      // (mult (x) mult)(1 (x) middle (x) 1)(Delta e_i (x) Delta e_j)
      SVec t = sv_tensor(dl.col[i], dl.col[j], h.dim * h.dim);
      std::vector<long> legs4{h.dim, h.dim, h.dim, h.dim};
      t = apply_on_legs(*middle, legs4, 1, 2, {h.dim, h.dim}, t);
      SVec rhs;
      std::vector<long> ii(4);
      for (const auto& term : t) {
        split_index(legs4, term.first, ii);
        SVec pr = sv_tensor(ops.basis_product(ii[0], ii[1]), ops.basis_product(ii[2], ii[3]), h.dim);
        for (auto& x : sv_scale(term.second, pr)) rhs.push_back(std::move(x));
      }
      sv_normalize(rhs);
      mlt.check({i, j}, lhs, rhs);
    }
  rep.add("comult multiplicative", mlt.pass, mlt.w);

  FirstFail emu;
  for (long i = 0; i < h.dim && emu.pass; ++i)
    for (long j = 0; j < h.dim && emu.pass; ++j) {
      SVec prod = ops.basis_product(i, j);
      std::vector<long> l1{h.dim};
      SVec lhs = apply_on_legs(ep, l1, 0, 1, {}, prod);
      Scalar rhs_c = Scalar::zero(h.field);
      {
        std::vector<long> l{h.dim};
        SVec ei = apply_on_legs(ep, l, 0, 1, {}, sv_term(i, one));
        std::vector<long> l2{h.dim};
        SVec ej = apply_on_legs(ep, l2, 0, 1, {}, sv_term(j, one));
        Scalar ci = ei.empty() ? Scalar::zero(h.field) : ei[0].second;
        Scalar cj = ej.empty() ? Scalar::zero(h.field) : ej[0].second;
        rhs_c = ci * cj;
      }
      emu.check({i, j}, lhs, sv_term(0, rhs_c));
    }
  rep.add("counit multiplicative", emu.pass, emu.w);

  {
    std::vector<long> l{h.dim};
    SVec du = apply_on_legs(dl, l, 0, 1, {h.dim, h.dim}, ops.unit_elem());
    SVec uu = sv_tensor(ops.unit_elem(), ops.unit_elem(), h.dim);
    rep.add("comult of unit", sv_equal(du, uu), sv_equal(du, uu) ? "" : witness({}, du, uu));
    std::vector<long> l2{h.dim};
    SVec eu = apply_on_legs(ep, l2, 0, 1, {}, ops.unit_elem());
    rep.add("counit of unit", sv_equal(eu, sv_term(0, one)), "");
  }

  FirstFail antl, antr;
  for (long i = 0; i < h.dim; ++i) {
    SVec d = dl.col[i];
    SVec lhs_l, lhs_r;
    std::vector<long> ii(2);
    std::vector<long> legs{h.dim, h.dim};
    for (const auto& term : d) {
      split_index(legs, term.first, ii);
      SVec s1 = apply_sparse(s, sv_term(ii[0], one));
      SVec pr = ops.product(s1, sv_term(ii[1], one));
      for (auto& x : sv_scale(term.second, pr)) lhs_l.push_back(std::move(x));
      SVec s2 = apply_sparse(s, sv_term(ii[1], one));
      SVec pr2 = ops.product(sv_term(ii[0], one), s2);
      for (auto& x : sv_scale(term.second, pr2)) lhs_r.push_back(std::move(x));
    }
    sv_normalize(lhs_l);
    sv_normalize(lhs_r);
    std::vector<long> l{h.dim};
    SVec eps = apply_on_legs(ep, l, 0, 1, {}, sv_term(i, one));
    Scalar c = eps.empty() ? Scalar::zero(h.field) : eps[0].second;
    SVec rhs = sv_scale(c, ops.unit_elem());
    antl.check({i}, lhs_l, rhs);
    antr.check({i}, lhs_r, rhs);
  }
  rep.add("antipode left", antl.pass, antl.w);
  rep.add("antipode right", antr.pass, antr.w);
  return rep;
}

Hopf dual_hopf(const Hopf& h) {
  Hopf d;
  d.field = h.field;
  d.dim = h.dim;
  d.mult = h.comult.transpose();
  d.unit = h.counit.transpose();
  d.comult = h.mult.transpose();
  d.counit = h.unit.transpose();
  d.antipode = h.antipode.transpose();
  return d;
}

Algebra opposite_algebra(const Algebra& a, const SparseCols& crossing) {
  if (crossing.rows != a.dim * a.dim || crossing.cols != a.dim * a.dim)
    throw DimMismatch("opposite_algebra crossing shape");
  AlgebraOps ops(a);
  std::vector<SVec> cols(a.dim * a.dim);
  for (long i = 0; i < a.dim; ++i)
    for (long j = 0; j < a.dim; ++j) {
      SVec crossed = crossing.col[i * a.dim + j];
      SVec out;
      std::vector<long> legs{a.dim, a.dim};
      std::vector<long> ii(2);
      for (const auto& t : crossed) {
        split_index(legs, t.first, ii);
        for (auto& x : sv_scale(t.second, ops.basis_product(ii[0], ii[1]))) out.push_back(std::move(x));
      }
      sv_normalize(out);
      cols[i * a.dim + j] = std::move(out);
    }
  return Algebra{a.field, a.dim, columns_to_matrix(a.field, a.dim, cols), a.unit};
}

AxiomReport hopf_morphism_check(const Matrix& f, const Hopf& from, const Hopf& to) {
  AxiomReport rep;
  rep.subject = "hopf morphism";
  if (from.field != to.field) throw FieldMismatch("hopf_morphism_check");
  expect_shape(f, to.dim, from.dim, "morphism");
  SparseCols fc = sparse_cols(f);
  AlgebraOps ops_from(from), ops_to(to);
  SparseCols dl_from = sparse_cols(from.comult), dl_to = sparse_cols(to.comult);
  Scalar one = Scalar::one(from.field);

  FirstFail mul;
  for (long i = 0; i < from.dim && mul.pass; ++i)
    for (long j = 0; j < from.dim && mul.pass; ++j) {
      SVec lhs = apply_sparse(fc, ops_from.basis_product(i, j));
      SVec rhs = ops_to.product(fc.col[i], fc.col[j]);
      mul.check({i, j}, lhs, rhs);
    }
  rep.add("multiplicative", mul.pass, mul.w);

  {
    SVec lhs = apply_sparse(fc, ops_from.unit_elem());
    rep.add("unital", sv_equal(lhs, ops_to.unit_elem()),
            sv_equal(lhs, ops_to.unit_elem()) ? "" : witness({}, lhs, ops_to.unit_elem()));
  }

  FirstFail com;
  for (long i = 0; i < from.dim && com.pass; ++i) {
    SVec d = dl_from.col[i];
    std::vector<long> legs{from.dim, from.dim};
    SVec lhs = apply_on_legs(fc, legs, 0, 1, {to.dim}, d);
    lhs = apply_on_legs(fc, legs, 1, 1, {to.dim}, lhs);
    SVec rhs = apply_sparse(dl_to, fc.col[i]);
    com.check({i}, lhs, rhs);
  }
  rep.add("comultiplicative", com.pass, com.w);

  FirstFail cou;
  SparseCols ep_from = sparse_cols(from.counit), ep_to = sparse_cols(to.counit);
  for (long i = 0; i < from.dim; ++i) {
    std::vector<long> l1{from.dim};
    SVec lhs = apply_on_legs(ep_from, l1, 0, 1, {}, sv_term(i, one));
    std::vector<long> l2{to.dim};
    SVec rhs = apply_on_legs(ep_to, l2, 0, 1, {}, fc.col[i]);
    cou.check({i}, lhs, rhs);
  }
  rep.add("counital", cou.pass, cou.w);

  FirstFail ant;
  SparseCols s_from = sparse_cols(from.antipode), s_to = sparse_cols(to.antipode);
  for (long i = 0; i < from.dim; ++i) {
    SVec lhs = apply_sparse(fc, s_from.col[i]);
    SVec rhs = apply_sparse(s_to, fc.col[i]);
    ant.check({i}, lhs, rhs);
  }
  rep.add("antipode intertwined", ant.pass, ant.w);
  return rep;
}

Matrix antipode_inverse(const Hopf& h) {
  auto inv = inverse(h.antipode);
  if (!inv) throw NotInvertible("antipode");
  return *inv;
}

}  // namespace hopflab

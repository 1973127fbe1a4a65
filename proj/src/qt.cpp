#include "hopflab/qt.hpp"

#include <sstream>

#include "hopflab/errors.hpp"

namespace hopflab {

namespace {

std::string two_sides(const SVec& lhs, const SVec& rhs) {
  return "lhs=" + sv_str(lhs) + ", rhs=" + sv_str(rhs);
}

SVec flip_square(const SVec& v, long dim) {
  SVec out;
  out.reserve(v.size());
  for (const auto& t : v)
    out.emplace_back((t.first % dim) * dim + t.first / dim, t.second);
  sv_normalize(out);
  return out;
}

}  // namespace

RMatrix RMatrix::make(HopfPtr hopf, const SVec& element) {
  AlgebraOps ops(*hopf);
  auto inv = ops.power_inverse(2, element);
  if (!inv) throw NotInvertible("r in H (x) H");
  return RMatrix{std::move(hopf), element, *inv};
}

AxiomReport check_qt(const Hopf& h, const SVec& r) {
  AxiomReport rep;
  rep.subject = "quasi-triangular structure";
  AlgebraOps ops(h);
  long n = h.dim;
  Scalar one = Scalar::one(h.field);
  SparseCols dl = sparse_cols(h.comult);
  SVec unit = ops.unit_elem();

  // r13, r23, r12 inside H^(x)3.
  SVec r13, r23, r12;
  for (const auto& t : r) {
    long a = t.first / n, b = t.first % n;
    SVec ea = sv_term(a, one), eb = sv_term(b, one);
    for (auto& x : sv_scale(t.second, sv_tensor(sv_tensor(ea, unit, n), eb, n)))
      r13.push_back(std::move(x));
    for (auto& x : sv_scale(t.second, sv_tensor(sv_tensor(unit, ea, n), eb, n)))
      r23.push_back(std::move(x));
    for (auto& x : sv_scale(t.second, sv_tensor(sv_tensor(ea, eb, n), unit, n)))
      r12.push_back(std::move(x));
  }
  sv_normalize(r13);
  sv_normalize(r23);
  sv_normalize(r12);

  {
    SVec lhs;
    for (const auto& t : r) {
      long a = t.first / n, b = t.first % n;
      for (auto& x : sv_scale(t.second, sv_tensor(dl.col[a], sv_term(b, one), n)))
        lhs.push_back(std::move(x));
    }
    sv_normalize(lhs);
    SVec rhs = ops.power_product(3, r13, r23);
    rep.add("(Delta (x) id)r = r13 r23", sv_equal(lhs, rhs),
            sv_equal(lhs, rhs) ? "" : two_sides(lhs, rhs));
  }
  {
    SVec lhs;
    for (const auto& t : r) {
      long a = t.first / n, b = t.first % n;
      for (auto& x : sv_scale(t.second, sv_tensor(sv_term(a, one), dl.col[b], n * n)))
        lhs.push_back(std::move(x));
    }
    sv_normalize(lhs);
    SVec rhs = ops.power_product(3, r13, r12);
    rep.add("(id (x) Delta)r = r13 r12", sv_equal(lhs, rhs),
            sv_equal(lhs, rhs) ? "" : two_sides(lhs, rhs));
  }
  {
    SVec left, right;
    for (const auto& t : r) {
      long a = t.first / n, b = t.first % n;
      for (auto& x : sv_scale(t.second * h.counit.at(0, a), sv_term(b, one)))
        left.push_back(std::move(x));
      for (auto& x : sv_scale(t.second * h.counit.at(0, b), sv_term(a, one)))
        right.push_back(std::move(x));
    }
    sv_normalize(left);
    sv_normalize(right);
    rep.add("(eps (x) id)r = 1", sv_equal(left, unit),
            sv_equal(left, unit) ? "" : two_sides(left, unit));
    rep.add("(id (x) eps)r = 1", sv_equal(right, unit),
            sv_equal(right, unit) ? "" : two_sides(right, unit));
  }
  {
    bool pass = true;
    std::string w;
    for (long t = 0; t < n && pass; ++t) {
      SVec dh = dl.col[t];
      SVec lhs = ops.power_product(2, r, dh);
      SVec rhs = ops.power_product(2, flip_square(dh, n), r);
      if (!sv_equal(lhs, rhs)) {
        pass = false;
        std::ostringstream os;
        os << "h=e" << t << ": " << two_sides(lhs, rhs);
        w = os.str();
      }
    }
    rep.add("r Delta = Delta-op r", pass, w);
  }
  rep.add("r invertible", ops.power_inverse(2, r).has_value());
  return rep;
}

bool is_triangular(const Hopf& h, const SVec& r) {
  AlgebraOps ops(h);
  return sv_equal(ops.power_product(2, flip_square(r, h.dim), r), ops.power_unit(2));
}

BraidingOp braiding_matrix(const RMatrix& r, const Module& m, const Module& n) {
  if (!same_hopf(m.over, r.hopf) || !same_hopf(n.over, r.hopf))
    throw BadInput("braiding_matrix: modules over a different Hopf algebra");
  auto rm = verify_module(m);
  if (!rm.ok()) throw BadInput("braiding_matrix: not a module: " + rm.first_failure()->axiom);
  auto rn = verify_module(n);
  if (!rn.ok()) throw BadInput("braiding_matrix: not a module: " + rn.first_failure()->axiom);

  const Hopf& h = *r.hopf;
  long ld = h.dim;
  Context ctx{r.hopf, r.element, r.inverse};
  Matrix phi = ctx.braiding(m, n);

  // Inverse from the antipode-inverse form: n (x) m -> r^(1).m (x) S^{-1}(r^(2)).n.
  Matrix sinv = antipode_inverse(h);
  std::vector<SVec> cols(n.dim * m.dim);
  for (long j = 0; j < n.dim; ++j)
    for (long i = 0; i < m.dim; ++i) {
      SVec out;
      for (const auto& tr : r.element) {
        long a = tr.first / ld, b = tr.first % ld;
        SVec am = column_to_sv(m.action, a * m.dim + i);
        SVec sn;
        for (long k = 0; k < ld; ++k) {
          Scalar c = sinv.at(k, b);
          if (c == Scalar::zero(h.field)) continue;
          for (auto& x : sv_scale(c, column_to_sv(n.action, k * n.dim + j))) sn.push_back(std::move(x));
        }
        sv_normalize(sn);
        for (const auto& tm : am)
          for (const auto& tn : sn)
            out.emplace_back(tm.first * n.dim + tn.first, tr.second * tm.second * tn.second);
      }
      sv_normalize(out);
      cols[j * m.dim + i] = std::move(out);
    }
  Matrix inv = columns_to_matrix(h.field, m.dim * n.dim, cols);
  if (!(inv * phi).is_identity() || !(phi * inv).is_identity())
    throw NotInvertible("braiding and its antipode-inverse form do not compose to the identity");
  return BraidingOp{std::move(phi), std::move(inv)};
}

AxiomCheck check_h_linearity(const Context& ctx, const Matrix& phi_mn, const Module& b,
                             const Matrix& comult_b, const Module& m, const Matrix& act_m,
                             const Module& n, const Matrix& act_n) {
  long nb = b.dim, nm = m.dim, nn = n.dim;
  if (phi_mn.rows() != nn * nm || phi_mn.cols() != nm * nn)
    throw DimMismatch("check_h_linearity: phi shape");
  if (comult_b.rows() != nb * nb || comult_b.cols() != nb)
    throw DimMismatch("check_h_linearity: comult shape");
  if (act_m.rows() != nm || act_m.cols() != nb * nm)
    throw DimMismatch("check_h_linearity: action on M shape");
  if (act_n.rows() != nn || act_n.cols() != nb * nn)
    throw DimMismatch("check_h_linearity: action on N shape");

  Scalar one = Scalar::one(ctx.field());
  SparseCols dl = sparse_cols(comult_b);
  SparseCols am = sparse_cols(act_m), an = sparse_cols(act_n);
  SparseCols phi = sparse_cols(phi_mn);
  SparseCols phi_bm = sparse_cols(ctx.braiding(b, m));
  SparseCols phi_bn = sparse_cols(ctx.braiding(b, n));

  for (long t = 0; t < nb; ++t)
    for (long i = 0; i < nm; ++i)
      for (long j = 0; j < nn; ++j) {
        SVec v = sv_term((t * nm + i) * nn + j, one);
        // phi applied after the diagonal action on M (x) N.
        std::vector<long> legs{nb, nm, nn};
        SVec x = apply_on_legs(dl, legs, 0, 1, {nb, nb}, v);
        x = apply_on_legs(phi_bm, legs, 1, 2, {nm, nb}, x);
        x = apply_on_legs(am, legs, 0, 2, {nm}, x);
        x = apply_on_legs(an, legs, 1, 2, {nn}, x);
        SVec lhs = apply_on_legs(phi, legs, 0, 2, {nn, nm}, x);
        // diagonal action on N (x) M after phi.
        std::vector<long> legs2{nb, nm, nn};
        SVec y = apply_on_legs(phi, legs2, 1, 2, {nn, nm}, v);
        y = apply_on_legs(dl, legs2, 0, 1, {nb, nb}, y);
        y = apply_on_legs(phi_bn, legs2, 1, 2, {nn, nb}, y);
        y = apply_on_legs(an, legs2, 0, 2, {nn}, y);
        SVec rhs = apply_on_legs(am, legs2, 1, 2, {nm}, y);
        if (!sv_equal(lhs, rhs)) {
          std::ostringstream os;
          os << "(" << t << "," << i << "," << j << "): " << two_sides(lhs, rhs);
          return AxiomCheck{"b-linearity of the braiding", false, os.str()};
        }
      }
  return AxiomCheck{"b-linearity of the braiding", true, ""};
}

bool check_symmetric_pair(const Matrix& phi_mn, const Matrix& phi_nm) {
  if (phi_nm.cols() != phi_mn.rows() || phi_nm.rows() != phi_mn.cols())
    throw DimMismatch("check_symmetric_pair");
  return (phi_nm * phi_mn).is_identity();
}

bool check_cocommutative(const Matrix& comult, const Matrix& phi_hh) {
  return phi_hh * comult == comult;
}

}  // namespace hopflab

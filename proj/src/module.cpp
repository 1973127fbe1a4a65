#include "hopflab/module.hpp"

#include <sstream>

#include "hopflab/errors.hpp"

namespace hopflab {

namespace {

std::string witness(const std::vector<long>& idx, const SVec& lhs, const SVec& rhs) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << "): lhs=" << sv_str(lhs) << ", rhs=" << sv_str(rhs);
  return os.str();
}

}  // namespace

bool same_hopf(const HopfPtr& a, const HopfPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->field == b->field && a->dim == b->dim && a->mult == b->mult && a->unit == b->unit &&
         a->comult == b->comult && a->counit == b->counit && a->antipode == b->antipode;
}

Matrix Module::act_of_basis(long h) const {
  Matrix m(action.field(), dim, dim);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c) m.at(r, c) = action.at(r, h * dim + c);
  return m;
}

Matrix Module::act_of(const SVec& elem) const {
  Matrix m(action.field(), dim, dim);
  for (const auto& t : elem)
    for (long r = 0; r < dim; ++r)
      for (long c = 0; c < dim; ++c) m.at(r, c) += t.second * action.at(r, t.first * dim + c);
  return m;
}

AxiomReport verify_module(const Module& m) {
  AxiomReport rep;
  rep.subject = "module";
  if (!m.over) throw BadParams("module has no Hopf algebra");
  const Hopf& h = *m.over;
  if (m.action.rows() != m.dim || m.action.cols() != h.dim * m.dim)
    throw DimMismatch("module action shape");
  AlgebraOps ops(h);
  SparseCols act = sparse_cols(m.action);
  Scalar one = Scalar::one(h.field);

  bool pass = true;
  std::string w;
  for (long a = 0; a < h.dim && pass; ++a)
    for (long b = 0; b < h.dim && pass; ++b) {
      SVec prod = ops.basis_product(a, b);
      for (long x = 0; x < m.dim && pass; ++x) {
        SVec lhs;
        for (const auto& t : prod)
          for (auto& e : sv_scale(t.second, act.col[t.first * m.dim + x])) lhs.push_back(std::move(e));
        sv_normalize(lhs);
        SVec bx = act.col[b * m.dim + x];
        SVec rhs;
        for (const auto& t : bx)
          for (auto& e : sv_scale(t.second, act.col[a * m.dim + t.first])) rhs.push_back(std::move(e));
        sv_normalize(rhs);
        if (!sv_equal(lhs, rhs)) {
          pass = false;
          w = witness({a, b, x}, lhs, rhs);
        }
      }
    }
  rep.add("action multiplicative", pass, w);

  bool upass = true;
  std::string uw;
  SVec u = ops.unit_elem();
  for (long x = 0; x < m.dim && upass; ++x) {
    SVec lhs;
    for (const auto& t : u)
      for (auto& e : sv_scale(t.second, act.col[t.first * m.dim + x])) lhs.push_back(std::move(e));
    sv_normalize(lhs);
    if (!sv_equal(lhs, sv_term(x, one))) {
      upass = false;
      uw = witness({x}, lhs, sv_term(x, one));
    }
  }
  rep.add("unit acts as identity", upass, uw);
  return rep;
}

AxiomReport verify_comodule(const Comodule& c) {
  AxiomReport rep;
  rep.subject = "comodule";
  if (!c.over) throw BadParams("comodule has no Hopf algebra");
  const Hopf& h = *c.over;
  if (c.coaction.rows() != c.dim * h.dim || c.coaction.cols() != c.dim)
    throw DimMismatch("coaction shape");
  SparseCols rho = sparse_cols(c.coaction);
  SparseCols dl = sparse_cols(h.comult);
  SparseCols ep = sparse_cols(h.counit);
  Scalar one = Scalar::one(h.field);

  bool pass = true;
  std::string w;
  for (long x = 0; x < c.dim && pass; ++x) {
    SVec d = rho.col[x];
    std::vector<long> legs_l{c.dim, h.dim};
    SVec lhs = apply_on_legs(rho, legs_l, 0, 1, {c.dim, h.dim}, d);
    std::vector<long> legs_r{c.dim, h.dim};
    SVec rhs = apply_on_legs(dl, legs_r, 1, 1, {h.dim, h.dim}, d);
    if (!sv_equal(lhs, rhs)) {
      pass = false;
      w = witness({x}, lhs, rhs);
    }
  }
  rep.add("coaction coassociative", pass, w);

  bool cpass = true;
  std::string cw;
  for (long x = 0; x < c.dim && cpass; ++x) {
    std::vector<long> legs{c.dim, h.dim};
    SVec lhs = apply_on_legs(ep, legs, 1, 1, {}, rho.col[x]);
    if (!sv_equal(lhs, sv_term(x, one))) {
      cpass = false;
      cw = witness({x}, lhs, sv_term(x, one));
    }
  }
  rep.add("counit law", cpass, cw);
  return rep;
}

Module trivial_module(HopfPtr h, long dim) {
  // h . m = counit(h) m
  Matrix act(h->field, dim, h->dim * dim);
  for (long a = 0; a < h->dim; ++a)
    for (long x = 0; x < dim; ++x) act.at(x, a * dim + x) = h->counit.at(0, a);
  return Module{std::move(h), dim, std::move(act)};
}

Module regular_module(HopfPtr h) {
  Matrix act = h->mult;
  long d = h->dim;
  return Module{std::move(h), d, std::move(act)};
}

Module tensor_module(const Module& a, const Module& b) {
  if (!same_hopf(a.over, b.over)) throw FieldMismatch("tensor_module over different Hopf algebras");
  const Hopf& h = *a.over;
  long d = a.dim * b.dim;
  SparseCols acta = sparse_cols(a.action), actb = sparse_cols(b.action);
  SparseCols dl = sparse_cols(h.comult);
  std::vector<SVec> cols(h.dim * d);
  std::vector<long> hh(2);
  for (long l = 0; l < h.dim; ++l) {
    SVec delta = dl.col[l];
    for (long x = 0; x < a.dim; ++x)
      for (long y = 0; y < b.dim; ++y) {
        SVec out;
        for (const auto& t : delta) {
          split_index({h.dim, h.dim}, t.first, hh);
          SVec u = acta.col[hh[0] * a.dim + x];
          SVec v = actb.col[hh[1] * b.dim + y];
          for (auto& e : sv_scale(t.second, sv_tensor(u, v, b.dim))) out.push_back(std::move(e));
        }
        sv_normalize(out);
        cols[l * d + (x * b.dim + y)] = std::move(out);
      }
  }
  return Module{a.over, d, columns_to_matrix(h.field, d, cols)};
}

Module dual_module(const Module& m) {
  const Hopf& h = *m.over;
  SparseCols s = sparse_cols(h.antipode);
  Matrix act(h.field, m.dim, h.dim * m.dim);
  for (long l = 0; l < h.dim; ++l) {
    Matrix sa = m.act_of(s.col[l]).transpose();
    for (long r = 0; r < m.dim; ++r)
      for (long c = 0; c < m.dim; ++c) act.at(r, l * m.dim + c) = sa.at(r, c);
  }
  return Module{m.over, m.dim, std::move(act)};
}

AxiomReport module_morphism_check(const Matrix& f, const Module& m, const Module& n) {
  AxiomReport rep;
  rep.subject = "module morphism";
  if (!same_hopf(m.over, n.over)) throw FieldMismatch("module_morphism_check");
  if (f.rows() != n.dim || f.cols() != m.dim) throw DimMismatch("module morphism shape");
  const Hopf& h = *m.over;
  bool pass = true;
  std::string w;
  for (long l = 0; l < h.dim && pass; ++l) {
    Matrix lhs = f * m.act_of_basis(l);
    Matrix rhs = n.act_of_basis(l) * f;
    if (lhs != rhs) {
      pass = false;
      w = "basis element " + std::to_string(l);
    }
  }
  rep.add("commutes with action", pass, w);
  return rep;
}

}  // namespace hopflab

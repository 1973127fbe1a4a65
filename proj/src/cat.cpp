#include "hopflab/cat.hpp"

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

void check_carrier(const Context& ctx, const Module& carrier) {
  if (!carrier.over || !same_hopf(carrier.over, ctx.ambient))
    throw BadParams("carrier is not a module over the ambient Hopf algebra");
}

// Associativity and unit law of an action given by columns of `action`.
void action_axioms(AxiomReport& rep, const AlgebraOps& ops, const Matrix& action, long mdim) {
  SparseCols act = sparse_cols(action);
  Scalar one = Scalar::one(action.field());
  long adim = ops.dim();

  bool pass = true;
  std::string w;
  for (long a = 0; a < adim && pass; ++a)
    for (long b = 0; b < adim && pass; ++b) {
      SVec prod = ops.basis_product(a, b);
      for (long x = 0; x < mdim && pass; ++x) {
        SVec lhs;
        for (const auto& t : prod)
          for (auto& e : sv_scale(t.second, act.col[t.first * mdim + x])) lhs.push_back(std::move(e));
        sv_normalize(lhs);
        SVec rhs;
        for (const auto& t : act.col[b * mdim + x])
          for (auto& e : sv_scale(t.second, act.col[a * mdim + t.first])) rhs.push_back(std::move(e));
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
  for (long x = 0; x < mdim && upass; ++x) {
    SVec lhs;
    for (const auto& t : u)
      for (auto& e : sv_scale(t.second, act.col[t.first * mdim + x])) lhs.push_back(std::move(e));
    sv_normalize(lhs);
    if (!sv_equal(lhs, sv_term(x, one))) {
      upass = false;
      uw = witness({x}, lhs, sv_term(x, one));
    }
  }
  rep.add("unit acts as identity", upass, uw);
}

}  // namespace

Algebra CatAlgebra::plain() const { return Algebra{carrier.over->field, carrier.dim, mult, unit}; }

Coalgebra CatCoalgebra::plain() const {
  return Coalgebra{carrier.over->field, carrier.dim, comult, counit};
}

Hopf CatHopf::plain() const {
  return Hopf{carrier.over->field, carrier.dim, mult, unit, comult, counit, antipode};
}

AxiomReport verify_cat_algebra(const Context& ctx, const CatAlgebra& a) {
  check_carrier(ctx, a.carrier);
  AxiomReport rep;
  rep.subject = "algebra in context";
  rep.merge(verify_algebra(a.plain()));
  rep.merge(module_morphism_check(a.mult, tensor_module(a.carrier, a.carrier), a.carrier), "mult ");
  rep.merge(module_morphism_check(a.unit, ctx.vec_object(1), a.carrier), "unit ");
  return rep;
}

AxiomReport verify_cat_coalgebra(const Context& ctx, const CatCoalgebra& c) {
  check_carrier(ctx, c.carrier);
  AxiomReport rep;
  rep.subject = "coalgebra in context";
  rep.merge(verify_coalgebra(c.plain()));
  rep.merge(module_morphism_check(c.comult, c.carrier, tensor_module(c.carrier, c.carrier)),
            "comult ");
  rep.merge(module_morphism_check(c.counit, c.carrier, ctx.vec_object(1)), "counit ");
  return rep;
}

AxiomReport verify_cat_hopf(const Context& ctx, const CatHopf& h) {
  check_carrier(ctx, h.carrier);
  AxiomReport rep;
  rep.subject = "hopf algebra in context";
  SparseCols middle = sparse_cols(ctx.braiding(h.carrier, h.carrier));
  rep.merge(verify_hopf(h.plain(), &middle));
  Module sq = tensor_module(h.carrier, h.carrier);
  rep.merge(module_morphism_check(h.mult, sq, h.carrier), "mult ");
  rep.merge(module_morphism_check(h.unit, ctx.vec_object(1), h.carrier), "unit ");
  rep.merge(module_morphism_check(h.comult, h.carrier, sq), "comult ");
  rep.merge(module_morphism_check(h.counit, h.carrier, ctx.vec_object(1)), "counit ");
  rep.merge(module_morphism_check(h.antipode, h.carrier, h.carrier), "antipode ");
  return rep;
}

AxiomReport verify_cat_module(const Context& ctx, const CatAlgebra& a, const CatModule& m) {
  check_carrier(ctx, a.carrier);
  check_carrier(ctx, m.carrier);
  if (m.action.rows() != m.carrier.dim || m.action.cols() != a.dim() * m.carrier.dim)
    throw DimMismatch("cat module action shape");
  AxiomReport rep;
  rep.subject = "module in context";
  AlgebraOps ops(a.mult, a.unit);
  action_axioms(rep, ops, m.action, m.carrier.dim);
  rep.merge(module_morphism_check(m.action, tensor_module(a.carrier, m.carrier), m.carrier),
            "action ");
  return rep;
}

AxiomReport verify_cat_comodule(const Context& ctx, const CatCoalgebra& c, const CatComodule& m) {
  check_carrier(ctx, c.carrier);
  check_carrier(ctx, m.carrier);
  long n = m.carrier.dim, hd = c.dim();
  if (m.coaction.rows() != n * hd || m.coaction.cols() != n)
    throw DimMismatch("cat comodule coaction shape");
  AxiomReport rep;
  rep.subject = "comodule in context";
  SparseCols rho = sparse_cols(m.coaction);
  SparseCols dl = sparse_cols(c.comult);
  SparseCols ep = sparse_cols(c.counit);
  Scalar one = Scalar::one(ctx.field());

  bool pass = true;
  std::string w;
  for (long x = 0; x < n && pass; ++x) {
    SVec d = rho.col[x];
    std::vector<long> legs_l{n, hd};
    SVec lhs = apply_on_legs(rho, legs_l, 0, 1, {n, hd}, d);
    std::vector<long> legs_r{n, hd};
    SVec rhs = apply_on_legs(dl, legs_r, 1, 1, {hd, hd}, d);
    if (!sv_equal(lhs, rhs)) {
      pass = false;
      w = witness({x}, lhs, rhs);
    }
  }
  rep.add("coaction coassociative", pass, w);

  bool cpass = true;
  std::string cw;
  for (long x = 0; x < n && cpass; ++x) {
    std::vector<long> legs{n, hd};
    SVec lhs = apply_on_legs(ep, legs, 1, 1, {}, rho.col[x]);
    if (!sv_equal(lhs, sv_term(x, one))) {
      cpass = false;
      cw = witness({x}, lhs, sv_term(x, one));
    }
  }
  rep.add("counit law", cpass, cw);

  rep.merge(module_morphism_check(m.coaction, m.carrier, tensor_module(m.carrier, c.carrier)),
            "coaction ");
  return rep;
}

AxiomReport verify_cat_module_algebra(const Context& ctx, const CatHopf& h,
                                      const CatModuleAlgebra& a) {
  AxiomReport rep;
  rep.subject = "module algebra in context";
  rep.merge(verify_cat_algebra(ctx, a.alg));
  rep.merge(verify_cat_module(ctx, h.algebra(), CatModule{a.alg.carrier, a.action}));

  long nh = h.dim(), na = a.alg.dim();
  SparseCols act = sparse_cols(a.action);
  SparseCols dl = sparse_cols(h.comult);
  SparseCols amult = sparse_cols(a.alg.mult);
  AlgebraOps aops(a.alg.mult, a.alg.unit);

  bool pass = true;
  std::string w;
  for (long l = 0; l < nh && pass; ++l)
    for (long x = 0; x < na && pass; ++x)
      for (long y = 0; y < na && pass; ++y) {
        SVec lhs;
        for (const auto& t : amult.col[x * na + y])
          for (auto& e : sv_scale(t.second, act.col[l * na + t.first])) lhs.push_back(std::move(e));
        sv_normalize(lhs);

        SVec rhs;
        for (const auto& dt : dl.col[l]) {
          long l1 = dt.first / nh, l2 = dt.first % nh;
          SVec crossed = ctx.braid(h.carrier, a.alg.carrier, sv_term(l2 * na + x, dt.second));
          for (const auto& ct : crossed) {
            long aa = ct.first / nh, hh = ct.first % nh;
            SVec prod = aops.product(act.col[l1 * na + aa], act.col[hh * na + y]);
            for (auto& e : sv_scale(ct.second, prod)) rhs.push_back(std::move(e));
          }
        }
        sv_normalize(rhs);
        if (!sv_equal(lhs, rhs)) {
          pass = false;
          w = witness({l, x, y}, lhs, rhs);
        }
      }
  rep.add("action respects products", pass, w);

  bool upass = true;
  std::string uw;
  SVec unit_a = aops.unit_elem();
  for (long l = 0; l < nh && upass; ++l) {
    SVec lhs;
    for (const auto& t : unit_a)
      for (auto& e : sv_scale(t.second, act.col[l * na + t.first])) lhs.push_back(std::move(e));
    sv_normalize(lhs);
    SVec rhs = sv_scale(h.counit.at(0, l), unit_a);
    if (!sv_equal(lhs, rhs)) {
      upass = false;
      uw = witness({l}, lhs, rhs);
    }
  }
  rep.add("action respects unit", upass, uw);
  return rep;
}

AxiomReport verify_cat_comodule_algebra(const Context& ctx, const CatHopf& h,
                                        const CatComoduleAlgebra& a) {
  AxiomReport rep;
  rep.subject = "comodule algebra in context";
  rep.merge(verify_cat_algebra(ctx, a.alg));
  rep.merge(verify_cat_comodule(ctx, h.coalgebra(), CatComodule{a.alg.carrier, a.coaction}));

  long nh = h.dim(), na = a.alg.dim();
  SparseCols rho = sparse_cols(a.coaction);
  AlgebraOps aops(a.alg.mult, a.alg.unit);
  AlgebraOps hops(h.mult, h.unit);

  bool pass = true;
  std::string w;
  for (long x = 0; x < na && pass; ++x)
    for (long y = 0; y < na && pass; ++y) {
      SVec lhs;
      for (const auto& t : aops.basis_product(x, y))
        for (auto& e : sv_scale(t.second, rho.col[t.first])) lhs.push_back(std::move(e));
      sv_normalize(lhs);

      SVec rhs;
      for (const auto& u : rho.col[x])
        for (const auto& v : rho.col[y]) {
          long x0 = u.first / nh, x1 = u.first % nh;
          long y0 = v.first / nh, y1 = v.first % nh;
          SVec crossed =
              ctx.braid(h.carrier, a.alg.carrier, sv_term(x1 * na + y0, u.second * v.second));
          for (const auto& ct : crossed) {
            long b = ct.first / nh, k = ct.first % nh;
            SVec prod = sv_tensor(aops.basis_product(x0, b), hops.basis_product(k, y1), nh);
            for (auto& e : sv_scale(ct.second, prod)) rhs.push_back(std::move(e));
          }
        }
      sv_normalize(rhs);
      if (!sv_equal(lhs, rhs)) {
        pass = false;
        w = witness({x, y}, lhs, rhs);
      }
    }
  rep.add("coaction multiplicative", pass, w);

  SVec lhs1;
  for (const auto& t : aops.unit_elem())
    for (auto& e : sv_scale(t.second, rho.col[t.first])) lhs1.push_back(std::move(e));
  sv_normalize(lhs1);
  SVec rhs1 = sv_tensor(aops.unit_elem(), hops.unit_elem(), nh);
  rep.add("coaction preserves unit", sv_equal(lhs1, rhs1),
          sv_equal(lhs1, rhs1) ? "" : witness({0}, lhs1, rhs1));
  return rep;
}

bool cat_commutative(const Context& ctx, const CatAlgebra& a) {
  return a.mult * ctx.braiding(a.carrier, a.carrier) == a.mult;
}

bool cat_cocommutative(const Context& ctx, const CatCoalgebra& c) {
  return ctx.braiding(c.carrier, c.carrier) * c.comult == c.comult;
}

CatAlgebra cat_tensor_algebra(const Context& ctx, const CatAlgebra& a, const CatAlgebra& b) {
  check_carrier(ctx, a.carrier);
  check_carrier(ctx, b.carrier);
  long na = a.dim(), nb = b.dim(), d = na * nb;
  SparseCols am = sparse_cols(a.mult), bm = sparse_cols(b.mult);
  Scalar one = Scalar::one(ctx.field());
  std::vector<SVec> cols(static_cast<size_t>(d) * d);
  for (long j = 0; j < nb; ++j)
    for (long k = 0; k < na; ++k) {
      SVec crossed = ctx.braid(b.carrier, a.carrier, sv_term(j * na + k, one));
      for (long i = 0; i < na; ++i)
        for (long l = 0; l < nb; ++l) {
          SVec out;
          for (const auto& ct : crossed) {
            long kk = ct.first / nb, jj = ct.first % nb;
            SVec prod = sv_tensor(am.col[i * na + kk], bm.col[jj * nb + l], nb);
            for (auto& e : sv_scale(ct.second, prod)) out.push_back(std::move(e));
          }
          sv_normalize(out);
          cols[(i * nb + j) * d + (k * nb + l)] = std::move(out);
        }
    }
  return CatAlgebra{tensor_module(a.carrier, b.carrier), columns_to_matrix(ctx.field(), d, cols),
                    kron(a.unit, b.unit)};
}

CatAlgebra cat_opposite(const Context& ctx, const CatAlgebra& a) {
  check_carrier(ctx, a.carrier);
  return CatAlgebra{a.carrier, a.mult * ctx.braiding(a.carrier, a.carrier), a.unit};
}

CatAlgebra as_cat(const Context& ctx, const Algebra& a) {
  if (a.field != ctx.field()) throw FieldMismatch("as_cat algebra");
  return CatAlgebra{ctx.vec_object(a.dim), a.mult, a.unit};
}

CatHopf as_cat(const Context& ctx, const Hopf& h) {
  if (h.field != ctx.field()) throw FieldMismatch("as_cat hopf");
  return CatHopf{ctx.vec_object(h.dim), h.mult, h.unit, h.comult, h.counit, h.antipode};
}

CatHopf dual_cat_hopf(const Context& ctx, const CatHopf& h) {
  check_carrier(ctx, h.carrier);
  long n = h.dim();
  const Field& f = ctx.field();
  Module dual_carrier = dual_module(h.carrier);
  Matrix phi = ctx.braiding(dual_carrier, h.carrier);  // H* (x) H -> H (x) H*

  // <f.g, h> = <f, h_1~><g~, h_2> with Phi_{H*,H}(g (x) h_1) = h_1~ (x) g~.
  SparseCols dl = sparse_cols(h.comult);
  Matrix mult(f, n, n * n);
  for (long k = 0; k < n; ++k)
    for (const auto& t : dl.col[k]) {
      long k1 = t.first / n, k2 = t.first % n;
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
          mult.at(k, i * n + j) += t.second * phi.at(i * n + k2, j * n + k1);
    }

  // <f_1, h~><f_2~, k> = <f, hk>: solve the braided pairing against the
  // multiplication.  The pairing matrix is invertible whenever Phi is.
  Matrix gram(f, n * n, n * n);
  for (long hh = 0; hh < n; ++hh)
    for (long l = 0; l < n; ++l)
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) gram.at(hh * n + l, i * n + j) = phi.at(i * n + l, j * n + hh);
  auto ginv = inverse(gram);
  if (!ginv) throw NotInvertible("dual pairing");
  Matrix comult = *ginv * h.mult.transpose();

  return CatHopf{std::move(dual_carrier), std::move(mult),       h.counit.transpose(),
                 std::move(comult),       h.unit.transpose(),    h.antipode.transpose()};
}

}  // namespace hopflab

#include "hopflab/modcat.hpp"

#include <algorithm>
#include <sstream>

#include "hopflab/errors.hpp"
#include "hopflab/qt.hpp"

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

void accumulate(SVec& dst, const Scalar& c, const SVec& v) {
  for (auto& e : sv_scale(c, v)) dst.push_back(std::move(e));
}

}  // namespace

CatAlgebra smash_product(const Context& ctx, const CatHopf& h, const CatModuleAlgebra& a) {
  check_carrier(ctx, h.carrier);
  check_carrier(ctx, a.alg.carrier);
  long nh = h.dim(), na = a.alg.dim(), d = na * nh;
  if (a.action.rows() != na || a.action.cols() != nh * na)
    throw DimMismatch("smash product action shape");
  SparseCols act = sparse_cols(a.action);
  SparseCols dl = sparse_cols(h.comult);
  AlgebraOps aops(a.alg.mult, a.alg.unit);
  AlgebraOps hops(h.mult, h.unit);

  std::vector<SVec> cols(static_cast<size_t>(d) * d);
  for (long j = 0; j < nh; ++j)
    for (const auto& dt : dl.col[j]) {
      long j1 = dt.first / nh, j2 = dt.first % nh;
      for (long k = 0; k < na; ++k) {
        SVec crossed = ctx.braid(h.carrier, a.alg.carrier, sv_term(j2 * na + k, dt.second));
        for (const auto& ct : crossed) {
          long ap = ct.first / nh, hp = ct.first % nh;
          SVec acted = sv_scale(ct.second, act.col[j1 * na + ap]);
          if (acted.empty()) continue;
          for (long i = 0; i < na; ++i) {
            SVec left;
            for (const auto& at : acted) accumulate(left, at.second, aops.basis_product(i, at.first));
            sv_normalize(left);
            if (left.empty()) continue;
            for (long l = 0; l < nh; ++l) {
              SVec out = sv_tensor(left, hops.basis_product(hp, l), nh);
              auto& dst = cols[static_cast<size_t>(i * nh + j) * d + (k * nh + l)];
              for (auto& e : out) dst.push_back(std::move(e));
            }
          }
        }
      }
    }
  for (auto& c : cols) sv_normalize(c);
  Matrix mult = columns_to_matrix(ctx.field(), d, cols);
  Matrix unit = sv_to_column(ctx.field(), d, sv_tensor(aops.unit_elem(), hops.unit_elem(), nh));
  return CatAlgebra{tensor_module(a.alg.carrier, h.carrier), std::move(mult), std::move(unit)};
}

CatModuleAlgebra trivial_module_structure(const CatHopf& h, const CatAlgebra& a) {
  long nh = h.dim(), na = a.dim();
  Matrix act(a.mult.field(), na, nh * na);
  for (long l = 0; l < nh; ++l)
    for (long x = 0; x < na; ++x) act.at(x, l * na + x) = h.counit.at(0, l);
  return CatModuleAlgebra{a, std::move(act)};
}

CatModule module_from_comodule(const Context& ctx, const CatHopf& b, const CatComodule& m) {
  check_carrier(ctx, b.carrier);
  check_carrier(ctx, m.carrier);
  long nb = b.dim(), nm = m.carrier.dim;
  if (m.coaction.rows() != nm * nb || m.coaction.cols() != nm)
    throw DimMismatch("coaction shape in module_from_comodule");
  Module dual_carrier = dual_module(b.carrier);
  SparseCols rho = sparse_cols(m.coaction);

  std::vector<SVec> cols(static_cast<size_t>(nb) * nm);
  for (long a = 0; a < nb; ++a)
    for (long x = 0; x < nm; ++x) {
      SVec out;
      for (const auto& t : rho.col[x]) {
        long x0 = t.first / nb, x1 = t.first % nb;
        SVec crossed = ctx.braid(dual_carrier, m.carrier, sv_term(a * nm + x0, t.second));
        for (const auto& ct : crossed) {
          long mp = ct.first / nb, ap = ct.first % nb;
          if (ap == x1) out.push_back({mp, ct.second});
        }
      }
      sv_normalize(out);
      cols[static_cast<size_t>(a) * nm + x] = std::move(out);
    }
  return CatModule{m.carrier, columns_to_matrix(ctx.field(), nm, cols)};
}

CatComodule comodule_from_module(const Context& ctx, const CatHopf& b, const CatModule& m) {
  check_carrier(ctx, b.carrier);
  check_carrier(ctx, m.carrier);
  long nb = b.dim(), nm = m.carrier.dim;
  if (m.action.rows() != nm || m.action.cols() != nb * nm)
    throw DimMismatch("action shape in comodule_from_module");
  SparseCols act = sparse_cols(m.action);
  Scalar one = Scalar::one(ctx.field());

  std::vector<SVec> cols(nm);
  for (long x = 0; x < nm; ++x) {
    SVec out;
    for (long k = 0; k < nb; ++k) {
      SVec crossed =
          ctx.braid(b.carrier, m.carrier, sv_tensor(sv_term(k, one), act.col[k * nm + x], nm));
      for (auto& e : crossed) out.push_back(std::move(e));
    }
    sv_normalize(out);
    cols[x] = std::move(out);
  }
  return CatComodule{m.carrier, columns_to_matrix(ctx.field(), nm * nb, cols)};
}

DualSmash dual_smash(const Context& ctx, const CatHopf& b, const CatComoduleAlgebra& t) {
  check_carrier(ctx, b.carrier);
  check_carrier(ctx, t.alg.carrier);
  CatHopf dual = dual_cat_hopf(ctx, b);
  CatModule tm = module_from_comodule(ctx, b, CatComodule{t.alg.carrier, t.coaction});
  CatModuleAlgebra t_mod{t.alg, tm.action};
  CatAlgebra alg = smash_product(ctx, dual, t_mod);

  long nb = b.dim(), nt = t.alg.dim(), d = nt * nb;
  SparseCols ddl = sparse_cols(dual.comult);

  // h.(t # f) = <f_1'', h'> t' # f_2: cross f_1 back past t, then back past h,
  // and evaluate against h.
  std::vector<SVec> cols(static_cast<size_t>(nb) * d);
  for (long l = 0; l < nb; ++l)
    for (long i = 0; i < nt; ++i)
      for (long j = 0; j < nb; ++j) {
        SVec out;
        for (const auto& dt : ddl.col[j]) {
          long f1 = dt.first / nb, f2 = dt.first % nb;
          SVec c1 = ctx.braid_inv(dual.carrier, t.alg.carrier, sv_term(i * nb + f1, dt.second));
          for (const auto& u : c1) {
            long f1p = u.first / nt, tp = u.first % nt;
            SVec c2 = ctx.braid_inv(dual.carrier, b.carrier, sv_term(l * nb + f1p, u.second));
            for (const auto& v : c2) {
              long f1pp = v.first / nb, hp = v.first % nb;
              if (f1pp == hp) out.push_back({tp * nb + f2, v.second});
            }
          }
        }
        sv_normalize(out);
        cols[static_cast<size_t>(l) * d + (i * nb + j)] = std::move(out);
      }
  Matrix h_action = columns_to_matrix(ctx.field(), d, cols);

  std::optional<AxiomCheck> agreement;
  if (cat_commutative(ctx, b.algebra())) {
    CatModuleAlgebra t_op{cat_opposite(ctx, t.alg), tm.action};
    SparseCols sharp = sparse_cols(smash_product(ctx, dual, t_op).mult);

    AlgebraOps tops(t.alg.mult, t.alg.unit);
    AlgebraOps dops(dual.mult, dual.unit);
    SparseCols rho = sparse_cols(t.coaction);
    Scalar one = Scalar::one(ctx.field());

    // B-action on B*: h > f = f_1' <f_2'', h''> through two inverse braidings.
    auto hit = [&](long hh, long ff) {
      SVec out;
      for (const auto& dt : ddl.col[ff]) {
        long g1 = dt.first / nb, g2 = dt.first % nb;
        SVec c1 = ctx.braid_inv(dual.carrier, b.carrier, sv_term(hh * nb + g1, dt.second));
        for (const auto& u : c1) {
          long g1p = u.first / nb, hp = u.first % nb;
          SVec c2 = ctx.braid_inv(dual.carrier, b.carrier, sv_term(hp * nb + g2, u.second));
          for (const auto& v : c2) {
            long g2p = v.first / nb, hpp = v.first % nb;
            if (g2p == hpp) out.push_back({g1p, v.second});
          }
        }
      }
      sv_normalize(out);
      return out;
    };

    // (a * f)(a' * f') = (a .op a'~_(0)) (x) (a'~_(1) > f~) f', crossing f
    // past a', then the coaction leg of a'~ acting on f~.
    bool pass = true;
    std::string w;
    for (long j = 0; j < nb && pass; ++j)
      for (long k = 0; k < nt && pass; ++k) {
        std::vector<SVec> partial(static_cast<size_t>(nt) * nb);
        SVec crossed = ctx.braid(dual.carrier, t.alg.carrier, sv_term(j * nt + k, one));
        for (const auto& c1 : crossed) {
          long kp = c1.first / nb, jp = c1.first % nb;
          for (const auto& c2 : rho.col[kp]) {
            long x0 = c2.first / nb, x1 = c2.first % nb;
            SVec acted = hit(x1, jp);
            if (acted.empty()) continue;
            Scalar c12 = c1.second * c2.second;
            for (long i = 0; i < nt; ++i) {
              SVec cr2 = ctx.braid(t.alg.carrier, t.alg.carrier, sv_term(i * nt + x0, one));
              SVec apart;
              for (const auto& c3 : cr2) accumulate(apart, c3.second, tops.basis_product(c3.first / nt, c3.first % nt));
              sv_normalize(apart);
              if (apart.empty()) continue;
              for (long l = 0; l < nb; ++l) {
                SVec hpart = dops.product(acted, sv_term(l, one));
                accumulate(partial[static_cast<size_t>(i) * nb + l], c12, sv_tensor(apart, hpart, nb));
              }
            }
          }
        }
        for (long i = 0; i < nt && pass; ++i)
          for (long l = 0; l < nb && pass; ++l) {
            SVec& star = partial[static_cast<size_t>(i) * nb + l];
            sv_normalize(star);
            const SVec& want = sharp.col[static_cast<size_t>(i * nb + j) * d + (k * nb + l)];
            if (!sv_equal(star, want)) {
              pass = false;
              w = witness({i, j, k, l}, star, want);
            }
          }
      }
    agreement = AxiomCheck{"coaction-side product agrees with smash", pass, w};
  }

  return DualSmash{std::move(dual), std::move(t_mod),
                   CatModuleAlgebra{std::move(alg), std::move(h_action)}, std::move(agreement)};
}

Biproduct biproduct(const Context& ctx, const CatHopf& b) {
  check_carrier(ctx, b.carrier);
  AxiomCheck lin = check_h_linearity(ctx, ctx.braiding(b.carrier, b.carrier), b.carrier, b.comult,
                                     b.carrier, b.mult, b.carrier, b.mult);
  if (!lin.pass) throw BraidingNotLinear("biproduct at " + lin.witness);

  const Hopf& amb = *ctx.ambient;
  const Field& f = ctx.field();
  long nb = b.dim(), nl = amb.dim, n = nb * nl;
  Scalar one = Scalar::one(f);
  AlgebraOps bops(b.mult, b.unit);
  AlgebraOps lops(amb.mult, amb.unit);
  SparseCols act = sparse_cols(b.carrier.action);
  SparseCols dl_amb = sparse_cols(amb.comult);
  SparseCols dl_b = sparse_cols(b.comult);

  // (b x h)(b' x h') = b (h_1 . b') x h_2 h'
  std::vector<SVec> mcols(static_cast<size_t>(n) * n);
  for (long j = 0; j < nl; ++j)
    for (const auto& dt : dl_amb.col[j]) {
      long j1 = dt.first / nl, j2 = dt.first % nl;
      for (long k = 0; k < nb; ++k) {
        SVec acted = sv_scale(dt.second, act.col[j1 * nb + k]);
        if (acted.empty()) continue;
        for (long i = 0; i < nb; ++i) {
          SVec left;
          for (const auto& at : acted) accumulate(left, at.second, bops.basis_product(i, at.first));
          sv_normalize(left);
          if (left.empty()) continue;
          for (long l = 0; l < nl; ++l) {
            SVec out = sv_tensor(left, lops.basis_product(j2, l), nl);
            auto& dst = mcols[static_cast<size_t>(i * nl + j) * n + (k * nl + l)];
            for (auto& e : out) dst.push_back(std::move(e));
          }
        }
      }
    }
  for (auto& c : mcols) sv_normalize(c);
  Matrix mult = columns_to_matrix(f, n, mcols);
  Matrix unit = sv_to_column(f, n, sv_tensor(bops.unit_elem(), lops.unit_elem(), nl));

  // lambda(m) = r^(2) (x) r^(1).m turns the action into a left coaction.
  std::vector<SVec> lam(nb);
  for (const auto& rt : ctx.r) {
    long ra = rt.first / nl, rb = rt.first % nl;
    for (long m = 0; m < nb; ++m)
      for (const auto& at : sv_scale(rt.second, act.col[ra * nb + m]))
        lam[m].push_back({rb * nb + at.first, at.second});
  }
  for (auto& c : lam) sv_normalize(c);

  // Delta(b x h) = (b_1 x b_2^(-1) h_1) (x) (b_2^(0) x h_2)
  std::vector<SVec> ccols(n);
  for (long i = 0; i < nb; ++i)
    for (long j = 0; j < nl; ++j) {
      SVec out;
      for (const auto& bt : dl_b.col[i]) {
        long i1 = bt.first / nb, i2 = bt.first % nb;
        for (const auto& lt : lam[i2]) {
          long el = lt.first / nb, mp = lt.first % nb;
          Scalar c12 = bt.second * lt.second;
          for (const auto& ht : dl_amb.col[j]) {
            long h1 = ht.first / nl, h2 = ht.first % nl;
            SVec first = sv_tensor(sv_term(i1, one), lops.basis_product(el, h1), nl);
            accumulate(out, c12 * ht.second, sv_tensor(first, sv_term(mp * nl + h2, one), n));
          }
        }
      }
      sv_normalize(out);
      ccols[static_cast<size_t>(i) * nl + j] = std::move(out);
    }
  Matrix comult = columns_to_matrix(f, n * n, ccols);

  Matrix counit(f, 1, n);
  for (long i = 0; i < nb; ++i)
    for (long j = 0; j < nl; ++j) counit.at(0, i * nl + j) = b.counit.at(0, i) * amb.counit.at(0, j);

  // S(b x h) = (1 x S(b^(-1) h)) (S_B(b^(0)) x 1)
  AlgebraOps smops(mult, unit);
  std::vector<SVec> scols(n);
  for (long i = 0; i < nb; ++i)
    for (long j = 0; j < nl; ++j) {
      SVec out;
      for (const auto& lt : lam[i]) {
        long el = lt.first / nb, mp = lt.first % nb;
        SVec u = sv_tensor(bops.unit_elem(), apply_dense(amb.antipode, lops.basis_product(el, j)), nl);
        SVec v = sv_tensor(column_to_sv(b.antipode, mp), lops.unit_elem(), nl);
        accumulate(out, lt.second, smops.product(u, v));
      }
      sv_normalize(out);
      scols[static_cast<size_t>(i) * nl + j] = std::move(out);
    }
  Matrix antipode = columns_to_matrix(f, n, scols);

  Matrix iota(f, n, nl);
  for (long j = 0; j < nl; ++j)
    for (const auto& t : bops.unit_elem()) iota.at(t.first * nl + j, j) = t.second;
  Matrix pi(f, nl, n);
  for (long i = 0; i < nb; ++i)
    for (long j = 0; j < nl; ++j) pi.at(j, i * nl + j) = b.counit.at(0, i);

  SVec lifted;
  for (const auto& rt : ctx.r)
    accumulate(lifted, rt.second,
               sv_tensor(column_to_sv(iota, rt.first / nl), column_to_sv(iota, rt.first % nl), n));
  sv_normalize(lifted);

  auto hopf = std::make_shared<Hopf>(Hopf{f, n, std::move(mult), std::move(unit),
                                          std::move(comult), std::move(counit),
                                          std::move(antipode)});
  return Biproduct{std::move(hopf), std::move(iota), std::move(pi), std::move(lifted)};
}

Module biproduct_module(const Biproduct& bp, const CatModule& m) {
  long nm = m.carrier.dim;
  long nl = m.carrier.over->dim;
  long nb = nm > 0 ? m.action.cols() / nm : 0;
  if (bp.hopf->dim != nb * nl || m.action.rows() != nm)
    throw DimMismatch("biproduct_module shapes");
  const Field& f = m.action.field();
  Matrix act(f, nm, bp.hopf->dim * nm);
  for (long i = 0; i < nb; ++i) {
    Matrix bi(f, nm, nm);
    for (long r = 0; r < nm; ++r)
      for (long c = 0; c < nm; ++c) bi.at(r, c) = m.action.at(r, i * nm + c);
    for (long j = 0; j < nl; ++j) {
      Matrix comp = bi * m.carrier.act_of_basis(j);
      for (long c = 0; c < nm; ++c)
        for (long r = 0; r < nm; ++r) act.at(r, (i * nl + j) * nm + c) = comp.at(r, c);
    }
  }
  return Module{bp.hopf, nm, std::move(act)};
}

AxiomReport check_inner_action(const Context& ctx, const CatHopf& h, const CatModuleAlgebra& a,
                               const Matrix& f, const Matrix& f_inv) {
  check_carrier(ctx, h.carrier);
  check_carrier(ctx, a.alg.carrier);
  long nh = h.dim(), na = a.alg.dim();
  if (f.rows() != na || f.cols() != nh || f_inv.rows() != na || f_inv.cols() != nh)
    throw DimMismatch("inner action candidate shape");
  AxiomReport rep;
  rep.subject = "inner action";
  AlgebraOps aops(a.alg.mult, a.alg.unit);
  SparseCols dl = sparse_cols(h.comult);
  SparseCols act = sparse_cols(a.action);
  SVec unit_a = aops.unit_elem();
  Scalar one = Scalar::one(ctx.field());

  auto conv = [&](const Matrix& p, const Matrix& q, const char* name) {
    bool pass = true;
    std::string w;
    for (long l = 0; l < nh && pass; ++l) {
      SVec out;
      for (const auto& dt : dl.col[l])
        accumulate(out, dt.second,
                   aops.product(column_to_sv(p, dt.first / nh), column_to_sv(q, dt.first % nh)));
      sv_normalize(out);
      SVec want = sv_scale(h.counit.at(0, l), unit_a);
      if (!sv_equal(out, want)) {
        pass = false;
        w = witness({l}, out, want);
      }
    }
    rep.add(name, pass, w);
  };
  conv(f, f_inv, "convolution inverse left");
  conv(f_inv, f, "convolution inverse right");

  bool pass = true;
  std::string w;
  for (long l = 0; l < nh && pass; ++l)
    for (long x = 0; x < na && pass; ++x) {
      SVec lhs = act.col[l * na + x];
      SVec rhs;
      for (const auto& dt : dl.col[l]) {
        long l1 = dt.first / nh, l2 = dt.first % nh;
        SVec crossed = ctx.braid(a.alg.carrier, a.alg.carrier,
                                 sv_tensor(column_to_sv(f_inv, l2), sv_term(x, one), na));
        SVec prod;
        for (const auto& ct : crossed)
          accumulate(prod, ct.second, aops.basis_product(ct.first / na, ct.first % na));
        sv_normalize(prod);
        accumulate(rhs, dt.second, aops.product(column_to_sv(f, l1), prod));
      }
      sv_normalize(rhs);
      if (!sv_equal(lhs, rhs)) {
        pass = false;
        w = witness({l, x}, lhs, rhs);
      }
    }
  rep.add("action is conjugation", pass, w);
  return rep;
}

Module internal_hom(const Context& ctx, const Module& m, const Module& n) {
  check_carrier(ctx, m);
  check_carrier(ctx, n);
  const Hopf& amb = *ctx.ambient;
  long md = m.dim, nd = n.dim, big = nd * md;
  SparseCols dl = sparse_cols(amb.comult);
  Matrix act(ctx.field(), big, amb.dim * big);
  for (long l = 0; l < amb.dim; ++l) {
    Matrix al(ctx.field(), big, big);
    for (const auto& dt : dl.col[l]) {
      long l1 = dt.first / amb.dim, l2 = dt.first % amb.dim;
      al = al + kron(n.act_of_basis(l1), m.act_of(column_to_sv(amb.antipode, l2)).transpose())
                    .scaled(dt.second);
    }
    for (long c = 0; c < big; ++c)
      for (long r = 0; r < big; ++r) act.at(r, l * big + c) = al.at(r, c);
  }
  return Module{ctx.ambient, big, std::move(act)};
}

CatAlgebra end_algebra(const Context& ctx, const Module& m) {
  long md = m.dim, big = md * md;
  Module hom = internal_hom(ctx, m, m);
  Scalar one = Scalar::one(ctx.field());
  Matrix mult(ctx.field(), big, big * big);
  for (long i = 0; i < md; ++i)
    for (long j = 0; j < md; ++j)
      for (long l = 0; l < md; ++l) mult.at(i * md + l, (i * md + j) * big + (j * md + l)) = one;
  Matrix unit(ctx.field(), big, 1);
  for (long i = 0; i < md; ++i) unit.at(i * md + i, 0) = one;
  return CatAlgebra{std::move(hom), std::move(mult), std::move(unit)};
}

Matrix action_as_end_map(const CatModule& m) {
  long md = m.carrier.dim;
  long nh = md > 0 ? m.action.cols() / md : 0;
  Matrix theta(m.action.field(), md * md, nh);
  for (long h = 0; h < nh; ++h)
    for (long i = 0; i < md; ++i)
      for (long j = 0; j < md; ++j) theta.at(i * md + j, h) = m.action.at(i, h * md + j);
  return theta;
}

CatModuleAlgebra end_module_algebra(const Context& ctx, const CatHopf& h, const CatModule& m) {
  check_carrier(ctx, h.carrier);
  check_carrier(ctx, m.carrier);
  long nh = h.dim(), md = m.carrier.dim, big = md * md;
  if (m.action.rows() != md || m.action.cols() != nh * md)
    throw DimMismatch("action shape in end_module_algebra");
  CatAlgebra alg = end_algebra(ctx, m.carrier);
  SparseCols dl = sparse_cols(h.comult);
  Scalar one = Scalar::one(ctx.field());

  std::vector<Matrix> amat(nh);
  for (long x = 0; x < nh; ++x) {
    amat[x] = Matrix(ctx.field(), md, md);
    for (long r = 0; r < md; ++r)
      for (long c = 0; c < md; ++c) amat[x].at(r, c) = m.action.at(r, x * md + c);
  }

  // h.F = theta(h_1) F~ theta(S~ h_2): on basis matrices an outer product of
  // a column of theta(h_1) with a row of theta(S h_2)~.
  Matrix act(ctx.field(), big, nh * big);
  for (long l = 0; l < nh; ++l)
    for (const auto& dt : dl.col[l]) {
      long l1 = dt.first / nh, l2 = dt.first % nh;
      SVec sh2 = sv_scale(dt.second, column_to_sv(h.antipode, l2));
      if (sh2.empty()) continue;
      for (long bidx = 0; bidx < big; ++bidx) {
        SVec crossed = ctx.braid(h.carrier, alg.carrier, sv_tensor(sh2, sv_term(bidx, one), big));
        for (const auto& ct : crossed) {
          long fp = ct.first / nh, bp = ct.first % nh;
          long ip = fp / md, jp = fp % md;
          for (long r = 0; r < md; ++r) {
            Scalar lc = ct.second * amat[l1].at(r, ip);
            if (lc.is_zero()) continue;
            for (long s = 0; s < md; ++s) act.at(r * md + s, l * big + bidx) += lc * amat[bp].at(jp, s);
          }
        }
      }
    }
  return CatModuleAlgebra{std::move(alg), std::move(act)};
}

}  // namespace hopflab

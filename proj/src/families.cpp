#include "hopflab/families.hpp"

#include <bit>
#include <string>

#include "hopflab/errors.hpp"

namespace hopflab {

namespace {

void validate_params(const HndParams& p, const Field& f) {
  if (p.m < 1) throw BadParams("group half-order must be positive");
  if (p.n < 0 || static_cast<long>(p.d.size()) != p.n)
    throw BadParams("weight list must have one entry per generator");
  long tm = 2 * p.m;
  for (long di : p.d)
    if (di % 2 == 0 || di < 1 || di >= tm)
      throw BadParams("weights must be odd and lie in [1, 2m)");
  if (f.is_rational()) {
    if (tm > 2) throw BadParams("rationals have no root of unity of order " + std::to_string(tm));
  } else {
    if (tm % f.p == 0) throw BadParams("characteristic divides the group order");
    if ((f.p - 1) % tm != 0)
      throw BadParams("no root of unity of order " + std::to_string(tm) + " modulo " +
                      std::to_string(f.p));
  }
}

long popcount_bits(long mask) { return std::popcount(static_cast<unsigned long long>(mask)); }

// Transpositions needed to merge the sorted generator lists of two disjoint
// subsets.
long inversions(long s, long t) {
  long inv = 0;
  for (long b = 0; t >> b; ++b)
    if ((t >> b) & 1) inv += popcount_bits(s >> (b + 1));
  return inv;
}

std::optional<Scalar> multiple_of(const Field& f, const SVec& v, const SVec& base) {
  if (v.empty()) return Scalar::zero(f);
  if (base.empty()) return std::nullopt;
  Scalar c = Scalar::zero(f);
  bool found = false;
  for (const auto& t : v)
    if (t.first == base.front().first) {
      c = t.second / base.front().second;
      found = true;
    }
  if (!found) return std::nullopt;
  if (!sv_equal(v, sv_scale(c, base))) return std::nullopt;
  return c;
}

}  // namespace

Hopf group_hopf(long m, const Field& f) { return hnd(HndParams{0, m, {}, std::nullopt}, f); }

SVec r_s(long m, long s, const Field& f) {
  HndParams base{0, m, {}, std::nullopt};
  validate_params(base, f);
  long tm = 2 * m;
  if (s < 0 || s >= tm) throw BadParams("quasi-triangular index out of range");
  Scalar w = Scalar::root_of_unity(f, tm);
  Scalar inv = Scalar::of(f, tm).inverse();
  SVec r;
  for (long j = 0; j < tm; ++j)
    for (long t = 0; t < tm; ++t)
      r.push_back({j * tm + (s * t) % tm, inv * w.pow(((tm - j * t % tm) % tm))});
  sv_normalize(r);
  return r;
}

SVec r_s_embedded(const HndParams& p, const Field& f, long s) {
  validate_params(p, f);
  long tm = 2 * p.m;
  long nsub = 1L << p.n;
  long N = tm * nsub;
  SVec out;
  for (const auto& t : r_s(p.m, s, f))
    out.push_back({(t.first / tm) * nsub * N + (t.first % tm) * nsub, t.second});
  sv_normalize(out);
  return out;
}

Hopf hnd(const HndParams& p, const Field& f) {
  validate_params(p, f);
  long tm = 2 * p.m;
  long nsub = 1L << p.n;
  long N = tm * nsub;
  Scalar w = Scalar::root_of_unity(f, tm);
  Scalar one = Scalar::one(f);
  auto idx = [&](long j, long mask) { return j * nsub + mask; };
  auto wpow = [&](long e) { return w.pow(((e % tm) + tm) % tm); };

  Matrix mult(f, N, N * N), unit(f, N, 1);
  for (long j = 0; j < tm; ++j)
    for (long s = 0; s < nsub; ++s) {
      long weight = 0;
      for (long b = 0; b < p.n; ++b)
        if ((s >> b) & 1) weight += p.d[b];
      for (long k = 0; k < tm; ++k)
        for (long t = 0; t < nsub; ++t) {
          if (s & t) continue;
          Scalar c = wpow(-k * weight);
          if (inversions(s, t) % 2 == 1) c = -c;
          mult.at(idx((j + k) % tm, s | t), idx(j, s) * N + idx(k, t)) = c;
        }
    }
  unit.at(0, 0) = one;

  AlgebraOps ops(mult, unit);
  // Product in the tensor square with the plain flip: the comultiplication of
  // an ordinary Hopf algebra is multiplicative for it.
  auto prod2 = [&](const SVec& u, const SVec& v) {
    SVec out;
    for (const auto& t1 : u)
      for (const auto& t2 : v) {
        SVec ac = ops.basis_product(t1.first / N, t2.first / N);
        SVec bd = ops.basis_product(t1.first % N, t2.first % N);
        for (const auto& x : ac)
          for (const auto& y : bd)
            out.push_back({x.first * N + y.first, t1.second * t2.second * x.second * y.second});
      }
    sv_normalize(out);
    return out;
  };

  Matrix comult(f, N * N, N), counit(f, 1, N), ant(f, N, N);
  SVec dg = sv_term(idx(1, 0) * N + idx(1, 0), one);
  std::vector<SVec> dx(p.n);
  for (long b = 0; b < p.n; ++b)
    dx[b] = sv_add(sv_term(idx(0, 0) * N + idx(0, 1L << b), one),
                   sv_term(idx(0, 1L << b) * N + idx(p.m, 0), one));
  SVec dgj = sv_term(0, one);
  for (long j = 0; j < tm; ++j) {
    for (long s = 0; s < nsub; ++s) {
      SVec acc = dgj;
      for (long b = 0; b < p.n; ++b)
        if ((s >> b) & 1) acc = prod2(acc, dx[b]);
      for (const auto& t : acc) comult.at(t.first, idx(j, s)) = t.second;
      if (s == 0) counit.at(0, idx(j, 0)) = one;
    }
    dgj = prod2(dgj, dg);
  }

  std::vector<SVec> sx(p.n);
  for (long b = 0; b < p.n; ++b)
    sx[b] = sv_term(idx(p.m, 1L << b), -wpow(-p.m * p.d[b]));
  for (long j = 0; j < tm; ++j)
    for (long s = 0; s < nsub; ++s) {
      SVec acc = ops.unit_elem();
      for (long b = p.n - 1; b >= 0; --b)
        if ((s >> b) & 1) acc = ops.product(acc, sx[b]);
      acc = ops.product(acc, sv_term(idx((tm - j) % tm, 0), one));
      for (const auto& t : acc) ant.at(t.first, idx(j, s)) = t.second;
    }

  return Hopf{f, N, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
              std::move(ant)};
}

std::vector<long> qt_congruence(const HndParams& p) {
  if (p.m < 1 || static_cast<long>(p.d.size()) != p.n)
    throw BadParams("weight list must have one entry per generator");
  long tm = 2 * p.m;
  std::vector<long> out;
  for (long s = 0; s < tm; ++s) {
    bool ok = true;
    for (long di : p.d)
      if (((s * di - p.m) % tm + tm) % tm != 0) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

std::vector<long> admissible_indices(const HndParams& p) {
  if (p.n < 1) throw BadParams("admissible indices need at least one generator");
  long tm = 2 * p.m;
  std::vector<long> out;
  for (long i = 1; i < p.n; ++i)
    if ((p.d[i - 1] + p.d[p.n - 1]) % tm == 0) out.push_back(i);
  return out;
}

long gal_group_dimension(const HndParams& p) {
  long r = static_cast<long>(admissible_indices(p).size());
  if (p.d[p.n - 1] == p.m) ++r;
  return r;
}

FamilySetting family_setting(const HndParams& p, const Field& f) {
  validate_params(p, f);
  if (p.n < 1) throw BadParams("the level construction needs at least one generator");
  if (!p.s) throw BadParams("a quasi-triangular index is required");
  std::vector<long> allowed = qt_congruence(p);
  if (std::find(allowed.begin(), allowed.end(), *p.s) == allowed.end())
    throw BadParams("index " + std::to_string(*p.s) + " fails the congruence");

  long tm = 2 * p.m;
  HndParams amb{p.n - 1, p.m, std::vector<long>(p.d.begin(), p.d.end() - 1), p.s};
  HopfPtr ambient = std::make_shared<const Hopf>(hnd(amb, f));

  long stride = 1L << (p.n - 1);
  long nl = ambient->dim;
  SVec lifted;
  for (const auto& t : r_s(p.m, *p.s, f))
    lifted.push_back({(t.first / tm) * stride * nl + (t.first % tm) * stride, t.second});
  sv_normalize(lifted);
  Context ctx = Context::with_r(ambient, lifted);

  Scalar w = Scalar::root_of_unity(f, tm);
  Scalar one = Scalar::one(f);
  long dn = p.d[p.n - 1];
  Matrix act(f, 2, nl * 2);
  for (long j = 0; j < tm; ++j) {
    act.at(0, j * stride * 2 + 0) = one;
    act.at(1, j * stride * 2 + 1) = w.pow((dn * j) % tm);
  }
  Matrix mult(f, 2, 4), unit(f, 2, 1), comult(f, 4, 2), counit(f, 1, 2), ant(f, 2, 2);
  mult.at(0, 0) = one;
  mult.at(1, 1) = one;
  mult.at(1, 2) = one;
  unit.at(0, 0) = one;
  comult.at(0, 0) = one;
  comult.at(1, 1) = one;
  comult.at(2, 1) = one;
  counit.at(0, 0) = one;
  ant.at(0, 0) = one;
  ant.at(1, 1) = -one;
  CatHopf line{Module{ambient, 2, std::move(act)}, std::move(mult), std::move(unit),
               std::move(comult), std::move(counit), std::move(ant)};
  return FamilySetting{p, ambient, std::move(ctx), std::move(line)};
}

CatHopf braided_line(const HndParams& p, const Field& f) {
  return family_setting(p, f).line;
}

PsiIso psi_iso(const HndParams& p, const Field& f) {
  Hopf source = hnd(p, f);
  FamilySetting fs = family_setting(p, f);
  Biproduct target = biproduct(fs.ctx, fs.line);
  long tm = 2 * p.m;
  long nsub = 1L << p.n;
  long stride = 1L << (p.n - 1);
  long nl = fs.ambient->dim;
  long N = source.dim;
  Scalar one = Scalar::one(f);

  AlgebraOps tops(target.hopf->mult, target.hopf->unit);
  SVec img_g = sv_term(stride, one);
  SVec img_xn = sv_term(nl + p.m * stride, one);

  Matrix psi(f, N, N);
  SVec gpow = tops.unit_elem();
  for (long j = 0; j < tm; ++j) {
    for (long s = 0; s < nsub; ++s) {
      SVec acc = gpow;
      for (long b = 0; b < p.n; ++b)
        if ((s >> b) & 1)
          acc = tops.product(acc, b + 1 < p.n ? sv_term(1L << b, one) : img_xn);
      for (const auto& t : acc) psi.at(t.first, j * nsub + s) = t.second;
    }
    gpow = tops.product(gpow, img_g);
  }
  return PsiIso{std::move(source), std::move(fs), std::move(target), std::move(psi)};
}

CatComoduleAlgebra c_object(const FamilySetting& fs, const Scalar& a,
                            const std::vector<Scalar>& alpha) {
  const HndParams& p = fs.params;
  const Field& f = fs.ctx.field();
  if (static_cast<long>(alpha.size()) != p.n - 1)
    throw BadParams("alpha must have one entry per lower generator");
  std::vector<long> allowed = admissible_indices(p);
  for (long i = 1; i < p.n; ++i)
    if (!alpha[i - 1].is_zero() &&
        std::find(allowed.begin(), allowed.end(), i) == allowed.end())
      throw BadParams("alpha is supported outside the admissible indices");
  if (!a.is_zero() && p.d[p.n - 1] != p.m)
    throw BadParams("a quadratic parameter requires the half weight");

  long tm = 2 * p.m;
  long stride = 1L << (p.n - 1);
  long nl = fs.ambient->dim;
  Scalar one = Scalar::one(f);
  Matrix act(f, 2, nl * 2);
  for (long c = 0; c < nl * 2; ++c) act.at(0, c) = fs.line.carrier.action.at(0, c);
  for (long c = 0; c < nl * 2; ++c) act.at(1, c) = fs.line.carrier.action.at(1, c);
  for (long i = 1; i < p.n; ++i)
    for (long j = 0; j < tm; ++j)
      act.at(0, (j * stride + (1L << (i - 1))) * 2 + 1) = alpha[i - 1];

  Matrix mult(f, 2, 4), unit(f, 2, 1), co(f, 4, 2);
  mult.at(0, 0) = one;
  mult.at(1, 1) = one;
  mult.at(1, 2) = one;
  mult.at(0, 3) = a;
  unit.at(0, 0) = one;
  co.at(0, 0) = one;
  co.at(1, 1) = one;
  co.at(2, 1) = one;
  return CatComoduleAlgebra{CatAlgebra{Module{fs.ambient, 2, std::move(act)}, std::move(mult),
                                       std::move(unit)},
                            std::move(co)};
}

CParams galois_invariant(const FamilySetting& fs, const CatComoduleAlgebra& t) {
  const Field& f = fs.ctx.field();
  if (t.alg.dim() != 2) throw BadParams("quadratic invariants need dimension two");
  if (!t.alg.carrier.over || !same_hopf(t.alg.carrier.over, fs.ambient))
    throw BadParams("carrier is not a module over the family ambient");
  Scalar one = Scalar::one(f);
  SVec u = column_to_sv(t.alg.unit, 0);
  if (u.empty()) throw BadParams("unit is zero");

  long k = -1;
  for (long cand = 0; cand < 2 && k < 0; ++cand) {
    Matrix span(f, 2, 2);
    for (const auto& tt : u) span.at(tt.first, 0) = tt.second;
    span.at(cand, 1) = one;
    if (rank(span) == 2) k = cand;
  }
  if (k < 0) throw BadParams("unit spans the whole object");

  // rho(e_k) = e_k (x) 1 + r u (x) x is forced for a Galois object; read r off
  // and normalize z = e_k / r.
  SVec resid = sv_sub(column_to_sv(t.coaction, k), sv_term(k * 2, one));
  SVec proj;
  for (const auto& tt : resid) {
    if (tt.first % 2 != 1) throw BadParams("coaction is not in normal form");
    proj.push_back({tt.first / 2, tt.second});
  }
  sv_normalize(proj);
  std::optional<Scalar> r = multiple_of(f, proj, u);
  if (!r || r->is_zero()) throw BadParams("no generator direction in the coaction");

  // z is the generator only up to adding a multiple of the unit; the copy to
  // keep is the eigenvector of the group-like action, so project onto its
  // eigenline.
  long tm = 2 * fs.params.m;
  long stride = 1L << (fs.params.n - 1);
  Scalar wd = Scalar::root_of_unity(f, tm).pow(fs.params.d[fs.params.n - 1] % tm);
  Matrix zc(f, 2, 1);
  zc.at(k, 0) = r->inverse();
  Matrix gz = t.alg.carrier.act_of_basis(stride) * zc;
  Matrix wc = (gz - zc).scaled((wd - one).inverse());
  SVec w = column_to_sv(wc, 0);

  AlgebraOps ops(t.alg.mult, t.alg.unit);
  std::optional<Scalar> a = multiple_of(f, ops.product(w, w), u);
  if (!a) throw BadParams("generator square is not a multiple of the unit");

  CParams out{*a, {}};
  for (long i = 1; i < fs.params.n; ++i) {
    Matrix az = t.alg.carrier.act_of_basis(1L << (i - 1)) * wc;
    std::optional<Scalar> ai = multiple_of(f, column_to_sv(az, 0), u);
    if (!ai) throw BadParams("generator action is not a multiple of the unit");
    out.alpha.push_back(*ai);
  }
  return out;
}

}  // namespace hopflab

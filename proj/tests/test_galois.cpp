#include "doctest.h"

#include "hopflab/errors.hpp"
#include "hopflab/galois.hpp"
#include "hopflab/qt.hpp"

#include "helpers.hpp"

using namespace hopflab;
using testutil::group_algebra;
using testutil::shared;
using testutil::taft4;

namespace {

SVec r_group(const Field& f, long n, long s) {
  SVec r;
  Scalar inv_n = Scalar::of(f, n).inverse();
  Scalar w = Scalar::root_of_unity(f, n);
  for (long j = 0; j < n; ++j)
    for (long t = 0; t < n; ++t) {
      long e = ((n - j * t % n) % n);
      r.push_back({j * n + (s * t) % n, inv_n * w.pow(e)});
    }
  sv_normalize(r);
  return r;
}

// R for the four-dimensional Hopf algebra with basis {1, x, g, gx}: the
// group-part R supported on {1, g}.
SVec r_sweedler(const Field& f) {
  Scalar h = Scalar::of(f, 2).inverse();
  return {{0, h}, {2, h}, {8, h}, {10, -h}};
}

// K[w]/w^2 with primitive comultiplication over the given carrier action.
CatHopf make_line(const HopfPtr& l, Matrix act) {
  const Field& f = l->field;
  Matrix mult(f, 2, 4), unit(f, 2, 1), comult(f, 4, 2), counit(f, 1, 2), ant(f, 2, 2);
  mult.at(0, 0) = Scalar::one(f);
  mult.at(1, 1) = Scalar::one(f);
  mult.at(1, 2) = Scalar::one(f);
  unit.at(0, 0) = Scalar::one(f);
  comult.at(0, 0) = Scalar::one(f);
  comult.at(1, 1) = Scalar::one(f);
  comult.at(2, 1) = Scalar::one(f);
  counit.at(0, 0) = Scalar::one(f);
  ant.at(0, 0) = Scalar::one(f);
  ant.at(1, 1) = -Scalar::one(f);
  return CatHopf{Module{l, 2, std::move(act)}, std::move(mult), std::move(unit),
                 std::move(comult), std::move(counit), std::move(ant)};
}

Matrix group_line_act(const HopfPtr& l, long d) {
  const Field& f = l->field;
  long n = l->dim;
  Scalar w = Scalar::root_of_unity(f, n);
  Matrix act(f, 2, n * 2);
  for (long j = 0; j < n; ++j) {
    act.at(0, j * 2 + 0) = Scalar::one(f);
    act.at(1, j * 2 + 1) = w.pow((d * j) % n);
  }
  return act;
}

// Carrier action for a line over the four-dimensional ambient: the group part
// acts by parity, the nilpotent part acts by zero.
Matrix sweedler_line_act(const Field& f) {
  Matrix act(f, 2, 8);
  act.at(0, 0) = Scalar::one(f);
  act.at(1, 1) = Scalar::one(f);
  act.at(0, 4) = Scalar::one(f);
  act.at(1, 5) = -Scalar::one(f);
  return act;
}

// Quadratic comodule algebra over a line: basis {u, w} with w^2 = a u and
// coaction rho(w) = u (x) x + w (x) 1; alpha is the value of the ambient
// nilpotent generator on w (Sweedler ambient only).
CatComoduleAlgebra quad_obj(const HopfPtr& l, Matrix act, const Scalar& a) {
  const Field& f = l->field;
  Matrix mult(f, 2, 4), unit(f, 2, 1), co(f, 4, 2);
  mult.at(0, 0) = Scalar::one(f);
  mult.at(1, 1) = Scalar::one(f);
  mult.at(1, 2) = Scalar::one(f);
  mult.at(0, 3) = a;
  unit.at(0, 0) = Scalar::one(f);
  co.at(0, 0) = Scalar::one(f);
  co.at(1, 1) = Scalar::one(f);
  co.at(2, 1) = Scalar::one(f);
  return CatComoduleAlgebra{CatAlgebra{Module{l, 2, std::move(act)}, std::move(mult),
                                       std::move(unit)},
                            std::move(co)};
}

CatComoduleAlgebra quad_sweedler(const HopfPtr& l, const Scalar& a, const Scalar& alpha) {
  const Field& f = l->field;
  Matrix act = sweedler_line_act(f);
  act.at(0, 3) = alpha;
  act.at(0, 7) = alpha;
  return quad_obj(l, std::move(act), a);
}

CatComoduleAlgebra regular_comodule_algebra(const CatHopf& b) {
  return CatComoduleAlgebra{b.algebra(), b.comult};
}

// K (+) K with every coefficient coacting trivially; not Galois.
CatComoduleAlgebra split_pair(const Context& ctx, long nb) {
  const Field& f = ctx.field();
  Matrix mult(f, 2, 4), unit(f, 2, 1), co(f, 2 * nb, 2);
  mult.at(0, 0) = Scalar::one(f);
  mult.at(1, 3) = Scalar::one(f);
  unit.at(0, 0) = Scalar::one(f);
  unit.at(1, 0) = Scalar::one(f);
  co.at(0, 0) = Scalar::one(f);
  co.at(nb, 1) = Scalar::one(f);
  return CatComoduleAlgebra{CatAlgebra{ctx.vec_object(2), std::move(mult), std::move(unit)},
                            std::move(co)};
}

CatAlgebra matrix_algebra_2(const Context& ctx) {
  const Field& f = ctx.field();
  Matrix mult(f, 4, 16), unit(f, 4, 1);
  for (long a = 0; a < 2; ++a)
    for (long b = 0; b < 2; ++b)
      for (long c = 0; c < 2; ++c)
        for (long d = 0; d < 2; ++d)
          if (b == c) mult.at(a * 2 + d, (a * 2 + b) * 4 + (c * 2 + d)) = Scalar::one(f);
  unit.at(0, 0) = Scalar::one(f);
  unit.at(3, 0) = Scalar::one(f);
  return CatAlgebra{ctx.vec_object(4), std::move(mult), std::move(unit)};
}

CocycleData group_cocycle_z2(const Field& f, const Scalar& t) {
  Matrix s(f, 2, 2), si(f, 2, 2);
  s.at(0, 0) = Scalar::one(f);
  s.at(0, 1) = Scalar::one(f);
  s.at(1, 0) = Scalar::one(f);
  s.at(1, 1) = t;
  si.at(0, 0) = Scalar::one(f);
  si.at(0, 1) = Scalar::one(f);
  si.at(1, 0) = Scalar::one(f);
  si.at(1, 1) = t.inverse();
  return CocycleData{std::move(s), std::move(si)};
}

CocycleData line_cocycle(const Field& f, const Scalar& a) {
  Matrix s(f, 2, 2), si(f, 2, 2);
  s.at(0, 0) = Scalar::one(f);
  s.at(1, 1) = a;
  si.at(0, 0) = Scalar::one(f);
  si.at(1, 1) = -a;
  return CocycleData{std::move(s), std::move(si)};
}

bool has_failed_check(const AxiomReport& rep, const std::string& axiom) {
  for (const auto& c : rep.checks)
    if (c.axiom == axiom) return !c.pass;
  return false;
}

}  // namespace

TEST_CASE("canonical map and coinvariants on a group algebra") {
  Field f = Field::rationals();
  Context ctx = Context::trivial(f);
  CatHopf b = as_cat(ctx, group_algebra(f, 2));
  CatComoduleAlgebra reg = regular_comodule_algebra(b);

  Matrix can = canonical_map(ctx, b, reg);
  Matrix expect(f, 4, 4);
  for (long i = 0; i < 2; ++i)
    for (long c = 0; c < 2; ++c) expect.at(((i + c) % 2) * 2 + c, i * 2 + c) = Scalar::one(f);
  CHECK(can == expect);

  Matrix coin = coinvariants(b, CatComodule{reg.alg.carrier, reg.coaction});
  Matrix unit_line(f, 2, 1);
  unit_line.at(0, 0) = Scalar::one(f);
  CHECK(coin == unit_line);

  CatComoduleAlgebra kk = split_pair(ctx, 2);
  CHECK(coinvariants(b, CatComodule{kk.alg.carrier, kk.coaction}).cols() == 2);
}

TEST_CASE("regular objects are Galois, split pairs are not") {
  Field f = Field::rationals();
  Context ctx = Context::trivial(f);

  CatHopf z2 = as_cat(ctx, group_algebra(f, 2));
  GaloisObject reg = regular_galois(ctx, z2);
  CHECK(reg.carrier.alg.dim() == 2);
  CHECK(inverse(reg.can).has_value());

  CatHopf t4 = as_cat(ctx, taft4(f));
  GaloisObject treg = regular_galois(ctx, t4);
  CHECK(treg.carrier.alg.dim() == 4);

  GaloisCheck bad = is_galois(ctx, z2, split_pair(ctx, 2));
  CHECK(!bad.object.has_value());
  CHECK(has_failed_check(bad.report, "canonical map invertible"));
  CHECK(has_failed_check(bad.report, "coinvariants one-dimensional"));
}

TEST_CASE("cotensor of regular objects reproduces the group algebra") {
  Field f = Field::rationals();
  Context ctx = Context::trivial(f);
  CatHopf b = as_cat(ctx, group_algebra(f, 2));
  GaloisObject reg = regular_galois(ctx, b);

  GaloisObject cot = cotensor(ctx, b, reg, reg);
  CHECK(cot.carrier.alg.dim() == 2);
  CHECK(cot.carrier.alg.mult == b.mult);
  CHECK(cot.carrier.alg.unit == b.unit);
  CHECK(cot.carrier.coaction == b.comult);

  Matrix id = Matrix::identity(f, 2);
  CHECK(comodule_algebra_morphism_check(ctx, b, id, cot.carrier, reg.carrier).ok());
}

TEST_CASE("left coaction matches the inverse braiding") {
  Field f = Field::rationals();
  Context ctx = Context::trivial(f);
  CatHopf b = as_cat(ctx, group_algebra(f, 2));
  CatComoduleAlgebra reg = regular_comodule_algebra(b);

  Matrix lam = left_coaction(ctx, b, reg);
  Matrix expect(f, 4, 2);
  expect.at(0, 0) = Scalar::one(f);
  expect.at(3, 1) = Scalar::one(f);
  CHECK(lam == expect);

  HopfPtr th = shared(taft4(f));
  Context cs = Context::with_r(th, r_sweedler(f));
  CatHopf line = make_line(th, sweedler_line_act(f));
  CatComoduleAlgebra c25 = quad_sweedler(th, Scalar::of(f, 2), Scalar::of(f, 5));

  Matrix blam = left_coaction(cs, line, c25);
  Matrix bexpect(f, 4, 2);
  bexpect.at(0, 0) = Scalar::one(f);
  bexpect.at(1, 1) = Scalar::one(f);
  bexpect.at(2, 1) = Scalar::one(f);
  CHECK(blam == bexpect);
  CHECK(blam == cs.braiding_inverse(line.carrier, c25.alg.carrier) * c25.coaction);
  CHECK(kron(line.comult, Matrix::identity(f, 2)) * blam ==
        kron(Matrix::identity(f, 2), blam) * blam);
}

TEST_CASE("cocycle checks on a group algebra") {
  Field f = Field::rationals();
  Context ctx = Context::trivial(f);
  CatHopf b = as_cat(ctx, group_algebra(f, 2));

  CocycleData good = group_cocycle_z2(f, Scalar::of(f, 2));
  CHECK(check_cocycle(ctx, b, good).ok());

  CocycleData bad_norm = group_cocycle_z2(f, Scalar::of(f, 2));
  bad_norm.sigma.at(0, 1) = Scalar::of(f, 2);
  CHECK(has_failed_check(check_cocycle(ctx, b, bad_norm), "normalized"));

  CocycleData bad_inv = group_cocycle_z2(f, Scalar::of(f, 2));
  bad_inv.sigma_inv.at(1, 1) = Scalar::one(f);
  CHECK(has_failed_check(check_cocycle(ctx, b, bad_inv), "convolution inverse"));
}

TEST_CASE("cocycle twist over a group algebra is a quadratic extension") {
  Field f = Field::rationals();
  Context ctx = Context::trivial(f);
  CatHopf b = as_cat(ctx, group_algebra(f, 2));

  GaloisObject tw = cocycle_twist(ctx, b, group_cocycle_z2(f, Scalar::of(f, 2)));
  CHECK(tw.carrier.alg.mult.at(0, 3) == Scalar::of(f, 2));
  CHECK(tw.carrier.alg.unit == b.unit);
  CHECK(tw.carrier.coaction == b.comult);

  GaloisObject triv = cocycle_twist(ctx, b, group_cocycle_z2(f, Scalar::one(f)));
  CHECK(triv.carrier.alg.mult == b.mult);

  std::optional<Matrix> nb = has_normal_basis(ctx, b, tw);
  REQUIRE(nb.has_value());
  CHECK(rank(*nb) == 2);
}

TEST_CASE("morphism search between quadratic twists") {
  Field f = Field::rationals();
  Context ctx = Context::trivial(f);
  CatHopf b = as_cat(ctx, group_algebra(f, 2));

  GaloisObject t2 = cocycle_twist(ctx, b, group_cocycle_z2(f, Scalar::of(f, 2)));
  GaloisObject t8 = cocycle_twist(ctx, b, group_cocycle_z2(f, Scalar::of(f, 8)));
  GaloisObject t3 = cocycle_twist(ctx, b, group_cocycle_z2(f, Scalar::of(f, 3)));

  std::optional<Matrix> iso = find_comodule_algebra_morphism(ctx, b, t8.carrier, t2.carrier);
  REQUIRE(iso.has_value());
  CHECK(comodule_algebra_morphism_check(ctx, b, *iso, t8.carrier, t2.carrier).ok());

  CHECK(!find_comodule_algebra_morphism(ctx, b, t3.carrier, t2.carrier).has_value());

  GaloisObject op = opposite_galois(ctx, b, t2);
  GaloisObject unit_class = cotensor(ctx, b, t2, op);
  GaloisObject reg = regular_galois(ctx, b);
  CHECK(find_comodule_algebra_morphism(ctx, b, unit_class.carrier, reg.carrier).has_value());
}

TEST_CASE("quadratic objects over the four-dimensional ambient are Galois") {
  Field f = Field::rationals();
  HopfPtr th = shared(taft4(f));
  CHECK(check_qt(*th, r_sweedler(f)).ok());
  Context ctx = Context::with_r(th, r_sweedler(f));
  CatHopf line = make_line(th, sweedler_line_act(f));

  GaloisObject reg = regular_galois(ctx, line);
  CHECK(reg.carrier.alg.dim() == 2);

  GaloisCheck gc = is_galois(ctx, line, quad_sweedler(th, Scalar::of(f, 2), Scalar::of(f, 5)));
  CHECK(gc.report.ok());
  REQUIRE(gc.object.has_value());

  GaloisCheck g0 = is_galois(ctx, line, quad_sweedler(th, Scalar::zero(f), Scalar::of(f, 5)));
  CHECK(g0.object.has_value());
}

TEST_CASE("braided cocycle twist matches the quadratic object") {
  Field f = Field::rationals();
  HopfPtr th = shared(taft4(f));
  Context ctx = Context::with_r(th, r_sweedler(f));
  CatHopf line = make_line(th, sweedler_line_act(f));

  CocycleData sig = line_cocycle(f, Scalar::of(f, 2));
  CHECK(check_cocycle(ctx, line, sig).ok());

  GaloisObject tw = cocycle_twist(ctx, line, sig);
  CatComoduleAlgebra c20 = quad_sweedler(th, Scalar::of(f, 2), Scalar::zero(f));
  CHECK(tw.carrier.alg.mult == c20.alg.mult);
  CHECK(tw.carrier.alg.unit == c20.alg.unit);
  CHECK(tw.carrier.coaction == c20.coaction);
}

TEST_CASE("line cocycles are rejected when the weight misses the half point") {
  Field f = Field::prime_with_root(13, 6);
  HopfPtr z6 = shared(group_algebra(f, 6));
  Context ctx = Context::with_r(z6, r_group(f, 6, 3));
  CatHopf line = make_line(z6, group_line_act(z6, 1));

  AxiomReport rej = check_cocycle(ctx, line, line_cocycle(f, Scalar::one(f)));
  CHECK(has_failed_check(rej, "linear over ambient"));
  CHECK_THROWS_AS(cocycle_twist(ctx, line, line_cocycle(f, Scalar::one(f))), BadParams);

  CHECK(check_cocycle(ctx, line, line_cocycle(f, Scalar::zero(f))).ok());
  GaloisObject triv = cocycle_twist(ctx, line, line_cocycle(f, Scalar::zero(f)));
  CHECK(triv.carrier.alg.mult == line.mult);
}

TEST_CASE("cotensor adds quadratic parameters") {
  Field f = Field::rationals();
  HopfPtr th = shared(taft4(f));
  Context ctx = Context::with_r(th, r_sweedler(f));
  CatHopf line = make_line(th, sweedler_line_act(f));

  GaloisObject s = is_galois(ctx, line, quad_sweedler(th, Scalar::of(f, 2), Scalar::of(f, 3))).object.value();
  GaloisObject t = is_galois(ctx, line, quad_sweedler(th, Scalar::of(f, 5), Scalar::of(f, 7))).object.value();
  GaloisObject cot = cotensor(ctx, line, s, t);

  CatComoduleAlgebra sum = quad_sweedler(th, Scalar::of(f, 7), Scalar::of(f, 10));
  CatComoduleAlgebra wrong = quad_sweedler(th, Scalar::of(f, 8), Scalar::of(f, 10));
  CHECK(find_comodule_algebra_morphism(ctx, line, cot.carrier, sum).has_value());
  CHECK(!find_comodule_algebra_morphism(ctx, line, cot.carrier, wrong).has_value());
}

TEST_CASE("cotensor adds quadratic parameters over a prime field") {
  Field f = Field::prime_with_root(13, 6);
  HopfPtr z6 = shared(group_algebra(f, 6));
  Context ctx = Context::with_r(z6, r_group(f, 6, 1));
  CatHopf line = make_line(z6, group_line_act(z6, 3));

  auto quad = [&](long a) {
    return is_galois(ctx, line, quad_obj(z6, group_line_act(z6, 3), Scalar::of(f, a))).object.value();
  };
  GaloisObject cot = cotensor(ctx, line, quad(2), quad(5));
  CHECK(find_comodule_algebra_morphism(ctx, line, cot.carrier, quad(7).carrier).has_value());
  CHECK(!find_comodule_algebra_morphism(ctx, line, cot.carrier, quad(8).carrier).has_value());
}

TEST_CASE("opposite negates quadratic parameters") {
  Field f = Field::rationals();
  HopfPtr th = shared(taft4(f));
  Context ctx = Context::with_r(th, r_sweedler(f));
  CatHopf line = make_line(th, sweedler_line_act(f));

  GaloisObject s = is_galois(ctx, line, quad_sweedler(th, Scalar::of(f, 2), Scalar::of(f, 5))).object.value();
  GaloisObject op = opposite_galois(ctx, line, s);
  CHECK(op.carrier.alg.mult.at(0, 3) == Scalar::of(f, -2));
  CHECK(op.carrier.coaction.at(1, 1) == Scalar::of(f, -1));
  CHECK(op.carrier.coaction.at(2, 1) == Scalar::one(f));

  CatComoduleAlgebra neg = quad_sweedler(th, Scalar::of(f, -2), Scalar::of(f, -5));
  CHECK(find_comodule_algebra_morphism(ctx, line, op.carrier, neg).has_value());

  GaloisObject reg = regular_galois(ctx, line);
  GaloisObject unit_class = cotensor(ctx, line, s, op);
  CHECK(find_comodule_algebra_morphism(ctx, line, unit_class.carrier, reg.carrier).has_value());
}

TEST_CASE("normal basis decisions for quadratic objects") {
  Field f = Field::rationals();
  HopfPtr th = shared(taft4(f));
  Context ctx = Context::with_r(th, r_sweedler(f));
  CatHopf line = make_line(th, sweedler_line_act(f));

  GaloisObject good = is_galois(ctx, line, quad_sweedler(th, Scalar::of(f, 3), Scalar::zero(f))).object.value();
  std::optional<Matrix> nb = has_normal_basis(ctx, line, good);
  REQUIRE(nb.has_value());
  CHECK(rank(*nb) == 2);

  GaloisObject none = is_galois(ctx, line, quad_sweedler(th, Scalar::zero(f), Scalar::of(f, 5))).object.value();
  CHECK(!has_normal_basis(ctx, line, none).has_value());
}

TEST_CASE("centralizer computes commutants") {
  Field f = Field::rationals();
  Context ctx = Context::trivial(f);

  CatHopf z2 = as_cat(ctx, group_algebra(f, 2));
  Matrix comm = centralizer(ctx, z2.algebra(), z2.carrier, z2.mult, z2.mult);
  CHECK(comm == Matrix::identity(f, 2));

  CatHopf t4 = as_cat(ctx, taft4(f));
  Matrix center = centralizer(ctx, t4.algebra(), t4.carrier, t4.mult, t4.mult);
  REQUIRE(center.cols() == 1);
  Matrix unit_line(f, 4, 1);
  unit_line.at(0, 0) = Scalar::one(f);
  CHECK(center == unit_line);
}

TEST_CASE("azumaya check separates matrix algebras from split pairs") {
  Field f = Field::rationals();
  Context ctx = Context::trivial(f);

  CHECK(azumaya_check(ctx, matrix_algebra_2(ctx)).ok());

  CatComoduleAlgebra kk = split_pair(ctx, 2);
  AxiomReport bad = azumaya_check(ctx, kk.alg);
  CHECK(!bad.ok());
  CHECK(has_failed_check(bad, "left defining map invertible"));

  HopfPtr th = shared(taft4(f));
  Context cs = Context::with_r(th, r_sweedler(f));
  CatHopf line = make_line(th, sweedler_line_act(f));
  CHECK(azumaya_check(cs, quad_sweedler(th, Scalar::of(f, 2), Scalar::zero(f)).alg).ok());
  CHECK(!azumaya_check(cs, line.algebra()).ok());
}

TEST_CASE("upsilon of a trivially acted matrix algebra is the regular object") {
  Field f = Field::rationals();
  Context ctx = Context::trivial(f);
  CatHopf b = as_cat(ctx, group_algebra(f, 2));

  CatModuleAlgebra am = trivial_module_structure(b, matrix_algebra_2(ctx));
  UpsilonResult ups = upsilon(ctx, b, am);
  CHECK(ups.object.carrier.alg.dim() == 2);

  // The splitting h -> 1 (x) h lands in the centralizer and realizes the
  // isomorphism from the regular object.
  Matrix sigma(f, 8, 2);
  for (long h = 0; h < 2; ++h) {
    sigma.at(h, h) = Scalar::one(f);
    sigma.at(6 + h, h) = Scalar::one(f);
  }
  std::optional<Matrix> cs = solve(ups.inclusion, sigma);
  REQUIRE(cs.has_value());
  CHECK(ups.inclusion * *cs == sigma);

  GaloisObject reg = regular_galois(ctx, b);
  AxiomReport morph = comodule_algebra_morphism_check(ctx, b, *cs, reg.carrier, ups.object.carrier);
  CHECK(morph.ok());
  CHECK(inverse(*cs).has_value());
  CHECK(has_normal_basis(ctx, b, ups.object).has_value());
}

TEST_CASE("gamma roundtrip recovers the object from its smash centralizer") {
  Field f = Field::rationals();
  Context ctx = Context::trivial(f);
  CatHopf b = as_cat(ctx, group_algebra(f, 2));

  GaloisObject t2 = cocycle_twist(ctx, b, group_cocycle_z2(f, Scalar::of(f, 2)));
  AxiomReport rep = gamma_roundtrip(ctx, b, t2.carrier);
  CHECK(rep.ok());

  HopfPtr th = shared(taft4(f));
  Context cs = Context::with_r(th, r_sweedler(f));
  CatHopf line = make_line(th, sweedler_line_act(f));
  CHECK(gamma_roundtrip(cs, line, regular_comodule_algebra(line)).ok());
  CHECK(gamma_roundtrip(cs, line, quad_sweedler(th, Scalar::of(f, 2), Scalar::zero(f))).ok());
  CHECK(gamma_roundtrip(cs, line, quad_sweedler(th, Scalar::zero(f), Scalar::of(f, 5))).ok());

  UpsilonResult ups = upsilon(cs, line, dual_smash(cs, line, quad_sweedler(th, Scalar::zero(f), Scalar::of(f, 5))).smash);
  CHECK(!has_normal_basis(cs, line, ups.object).has_value());
}

TEST_CASE("galois error paths") {
  Field f = Field::rationals();
  Context ctx = Context::trivial(f);
  CatHopf z2 = as_cat(ctx, group_algebra(f, 2));
  CatHopf t4 = as_cat(ctx, taft4(f));

  GaloisObject treg = regular_galois(ctx, t4);
  CHECK_THROWS_AS(cotensor(ctx, t4, treg, treg), BadParams);

  Matrix bad_sigma(f, 3, 3);
  CHECK_THROWS_AS(check_cocycle(ctx, z2, CocycleData{bad_sigma, bad_sigma}), DimMismatch);

  CatComoduleAlgebra kk = split_pair(ctx, 2);
  CHECK_THROWS_AS(upsilon(ctx, z2, trivial_module_structure(z2, kk.alg)), NotAzumaya);
  CHECK_THROWS_AS(gamma_roundtrip(ctx, z2, kk), BadParams);

  Matrix bad_f(f, 3, 2);
  GaloisObject reg = regular_galois(ctx, z2);
  CHECK_THROWS_AS(comodule_algebra_morphism_check(ctx, z2, bad_f, reg.carrier, reg.carrier),
                  DimMismatch);

  Matrix bad_left(f, 2, 3);
  CHECK_THROWS_AS(centralizer(ctx, z2.algebra(), z2.carrier, bad_left, z2.mult), DimMismatch);

  Field fp = Field::prime_with_root(13, 6);
  HopfPtr z6 = shared(group_algebra(fp, 6));
  Context c6 = Context::with_r(z6, r_group(fp, 6, 1));
  CatHopf line = make_line(z6, group_line_act(z6, 3));
  Matrix one_act(fp, 1, 6);
  Scalar w = Scalar::root_of_unity(fp, 6);
  for (long j = 0; j < 6; ++j) one_act.at(0, j) = w.pow(j);
  Matrix m1(fp, 1, 1), co1(fp, 2, 1);
  m1.at(0, 0) = Scalar::one(fp);
  co1.at(0, 0) = Scalar::one(fp);
  CatComoduleAlgebra charged{CatAlgebra{Module{z6, 1, one_act}, m1, m1}, co1};
  GaloisObject fake{charged, Matrix::identity(fp, 1)};
  CHECK_THROWS_AS(cotensor(c6, line, fake, fake), BadParams);
}

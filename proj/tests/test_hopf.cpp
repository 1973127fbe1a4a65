#include "doctest.h"
#include "helpers.hpp"
#include "hopflab/errors.hpp"

using namespace hopflab;
using namespace testutil;

TEST_CASE("group algebra is a Hopf algebra") {
  for (const Field& f : {Field::rationals(), Field::prime(13)}) {
    Hopf h = group_algebra(f, 6);
    AxiomReport rep = verify_hopf(h);
    INFO(rep.summary());
    CHECK(rep.ok());
  }
}

TEST_CASE("taft4 is a Hopf algebra") {
  Hopf h = taft4(Field::rationals());
  AxiomReport rep = verify_hopf(h);
  INFO(rep.summary());
  CHECK(rep.ok());
  // Antipode has order 4 here.
  Matrix s2 = h.antipode * h.antipode;
  CHECK(s2 != Matrix::identity(h.field, 4));
  CHECK(s2 * s2 == Matrix::identity(h.field, 4));
  CHECK(antipode_inverse(h) * h.antipode == Matrix::identity(h.field, 4));
}

TEST_CASE("corrupted structures fail with a first witness") {
  Hopf h = taft4(Field::rationals());

  SUBCASE("broken associativity") {
    Hopf bad = h;
    bad.mult.at(0, 1 * 4 + 1) = q(1);  // x * x = 1
    AxiomReport rep = verify_algebra(bad.algebra());
    CHECK(!rep.ok());
    const AxiomCheck* fail = rep.first_failure();
    REQUIRE(fail != nullptr);
    CHECK(fail->axiom == "associativity");
    CHECK(!fail->witness.empty());
  }

  SUBCASE("broken coassociativity") {
    Hopf bad = h;
    bad.comult.at(1 * 4 + 1, 1) = q(1);
    AxiomReport rep = verify_coalgebra(bad.coalgebra());
    CHECK(!rep.ok());
  }

  SUBCASE("broken compatibility") {
    Hopf bad = h;
    // Make x primitive for the wrong group-like.
    bad.comult.at(1 * 4 + 2, 1) = q(0);
    bad.comult.at(1 * 4 + 0, 1) = q(1);
    AxiomReport rep = verify_hopf(bad);
    CHECK(!rep.ok());
  }

  SUBCASE("broken antipode") {
    Hopf bad = h;
    bad.antipode.at(3, 1) = q(-1);
    AxiomReport rep = verify_hopf(bad);
    CHECK(!rep.ok());
    const AxiomCheck* fail = rep.first_failure();
    REQUIRE(fail != nullptr);
    CHECK(fail->axiom.find("antipode") != std::string::npos);
  }
}

TEST_CASE("witness is lexicographically first") {
  Field f = Field::rationals();
  // Non-associative: e1 * e1 = e1 with e1 not idempotent-compatible unit.
  Hopf h = group_algebra(f, 3);
  Hopf bad = h;
  bad.mult.at(0, 1 * 3 + 2) = q(2);  // g * g^2 = 2
  AxiomReport rep = verify_algebra(bad.algebra());
  REQUIRE(!rep.ok());
  const AxiomCheck* fail = rep.first_failure();
  // Triples with the unit as a factor agree (both sides hit the corrupted
  // product once); the first genuine failure is (g g) g vs g (g g^2).
  CHECK(fail->witness.substr(0, 7) == "(1,1,1)");
}

TEST_CASE("dual of group algebra and self-duality") {
  for (const Field& f : {Field::rationals(), Field::prime(13)}) {
    Hopf h = group_algebra(f, 2);
    Hopf d = dual_hopf(h);
    CHECK(verify_hopf(d).ok());
    // Fourier map g^j -> sum_t omega^{jt} e_t^* is a Hopf isomorphism.
    Scalar w = Scalar::root_of_unity(f, 2);
    Matrix fourier(f, 2, 2);
    for (long t = 0; t < 2; ++t)
      for (long j = 0; j < 2; ++j) fourier.at(t, j) = w.pow(j * t);
    CHECK(inverse(fourier).has_value());
    AxiomReport rep = hopf_morphism_check(fourier, h, d);
    INFO(rep.summary());
    CHECK(rep.ok());
  }
}

TEST_CASE("Fourier self-duality of K[Z_6] over F_13") {
  Field f = Field::prime_with_root(13, 6);
  Hopf h = group_algebra(f, 6);
  Hopf d = dual_hopf(h);
  CHECK(verify_hopf(d).ok());
  Scalar w = Scalar::mod_p(f.omega, 13);
  Matrix fourier(f, 6, 6);
  for (long t = 0; t < 6; ++t)
    for (long j = 0; j < 6; ++j) fourier.at(t, j) = w.pow(j * t);
  CHECK(inverse(fourier).has_value());
  CHECK(hopf_morphism_check(fourier, h, d).ok());
}

TEST_CASE("dual of taft4 is a Hopf algebra") {
  Hopf d = dual_hopf(taft4(Field::rationals()));
  AxiomReport rep = verify_hopf(d);
  INFO(rep.summary());
  CHECK(rep.ok());
}

TEST_CASE("opposite algebra") {
  Hopf h = taft4(Field::rationals());
  SparseCols flip = sparse_flip(h.field, 4, 4);
  Algebra op = opposite_algebra(h.algebra(), flip);
  CHECK(verify_algebra(op).ok());
  // x g = -g x distinguishes the opposite: in op, (x, g) column holds g x.
  AlgebraOps ops(op);
  CHECK(ops.basis_product(1, 2) == SVec{{3, q(1)}});
  AlgebraOps orig(h.algebra());
  CHECK(orig.basis_product(1, 2) == SVec{{3, q(-1)}});
  // Commutative algebra equals its opposite.
  Hopf gz = group_algebra(h.field, 4);
  Algebra gop = opposite_algebra(gz.algebra(), sparse_flip(h.field, 4, 4));
  CHECK(gop.mult == gz.mult);
}

TEST_CASE("morphism check rejects non-morphisms") {
  Hopf h = taft4(Field::rationals());
  Matrix id = Matrix::identity(h.field, 4);
  CHECK(hopf_morphism_check(id, h, h).ok());
  Matrix not_mor = id;
  not_mor.at(1, 1) = q(2);  // rescaling x is not comultiplicative
  CHECK(!hopf_morphism_check(not_mor, h, h).ok());
}

TEST_CASE("algebra ops in tensor powers") {
  Hopf h = taft4(Field::rationals());
  AlgebraOps ops(h);
  // (g (x) x) * (x (x) g) = gx (x) xg = gx (x) (-gx).
  SVec u = sv_term(2 * 4 + 1, q(1));
  SVec v = sv_term(1 * 4 + 2, q(1));
  SVec prod = ops.power_product(2, u, v);
  CHECK(prod == SVec{{3 * 4 + 3, q(-1)}});
  CHECK(ops.power_unit(2) == sv_term(0, q(1)));
  // Left multiplication matrix by g in the regular representation.
  Matrix lg = ops.left_mult(sv_term(2, q(1)));
  CHECK(lg * lg == Matrix::identity(h.field, 4));
}

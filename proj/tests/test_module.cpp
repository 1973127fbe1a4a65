#include "doctest.h"
#include "helpers.hpp"
#include "hopflab/module.hpp"

using namespace hopflab;
using namespace testutil;

TEST_CASE("regular and trivial modules verify") {
  HopfPtr h = shared(taft4(Field::rationals()));
  CHECK(verify_module(regular_module(h)).ok());
  CHECK(verify_module(trivial_module(h, 3)).ok());
}

TEST_CASE("corrupted action fails") {
  HopfPtr h = shared(taft4(Field::rationals()));
  Module m = regular_module(h);
  m.action.at(0, 1 * 4 + 1) = q(1);  // x . x = 1
  CHECK(!verify_module(m).ok());
}

TEST_CASE("tensor module is a module") {
  HopfPtr h = shared(taft4(Field::rationals()));
  Module r = regular_module(h);
  Module t = tensor_module(r, r);
  CHECK(t.dim == 16);
  CHECK(verify_module(t).ok());
  Module tt = tensor_module(t, trivial_module(h, 2));
  CHECK(verify_module(tt).ok());
}

TEST_CASE("dual module is a module") {
  HopfPtr h = shared(taft4(Field::rationals()));
  Module d = dual_module(regular_module(h));
  CHECK(verify_module(d).ok());
  HopfPtr g = shared(group_algebra(Field::prime(13), 6));
  CHECK(verify_module(dual_module(regular_module(g))).ok());
}

TEST_CASE("characters of a group algebra as one-dimensional modules") {
  Field f = Field::prime_with_root(13, 6);
  HopfPtr h = shared(group_algebra(f, 6));
  Scalar w = Scalar::mod_p(f.omega, 13);
  for (long k = 0; k < 6; ++k) {
    Matrix act(f, 1, 6);
    for (long j = 0; j < 6; ++j) act.at(0, j) = w.pow(j * k);
    Module chi{h, 1, act};
    CHECK(verify_module(chi).ok());
  }
}

TEST_CASE("module morphism check") {
  HopfPtr h = shared(taft4(Field::rationals()));
  Module r = regular_module(h);
  CHECK(module_morphism_check(Matrix::identity(r.action.field(), 4), r, r).ok());
  // Right multiplication by g commutes with the left regular action.
  AlgebraOps ops(*h);
  Matrix rg(r.action.field(), 4, 4);
  for (long j = 0; j < 4; ++j) {
    SVec col = ops.product(sv_term(j, q(1)), sv_term(2, q(1)));
    for (const auto& t : col) rg.at(t.first, j) = t.second;
  }
  CHECK(module_morphism_check(rg, r, r).ok());
  // Left multiplication by g does not (taft4 is noncommutative).
  Matrix lg = ops.left_mult(sv_term(2, q(1)));
  CHECK(!module_morphism_check(lg, r, r).ok());
}

TEST_CASE("act_of on combinations") {
  HopfPtr h = shared(taft4(Field::rationals()));
  Module r = regular_module(h);
  SVec elem{{0, q(1)}, {2, q(2)}};  // 1 + 2g
  Matrix a = r.act_of(elem);
  Matrix expected = Matrix::identity(r.action.field(), 4) + r.act_of_basis(2).scaled(q(2));
  CHECK(a == expected);
}

#include "doctest.h"

#include "hopflab/context.hpp"
#include "hopflab/diagram.hpp"
#include "hopflab/errors.hpp"

#include "helpers.hpp"

using namespace hopflab;
using testutil::q;

TEST_CASE("identity layer compiles to the identity") {
  DiagramEnv env(Field::rationals());
  env.add_object("X", 3);
  Diagram d{{"X"}, {{Box::id("X")}}};
  CHECK(compile(d, env) == Matrix::identity(env.field(), 3));
  Diagram empty{{"X"}, {}};
  CHECK(compile(empty, env) == Matrix::identity(env.field(), 3));
}

TEST_CASE("snake identities") {
  DiagramEnv env(Field::rationals());
  for (long n : {1L, 2L, 3L}) {
    std::string x = "X" + std::to_string(n);
    env.add_object(x, n);
    Diagram left{{x}, {{Box::coev(x), Box::id(x)}, {Box::id(x), Box::ev(x)}}};
    CHECK(compile(left, env) == Matrix::identity(env.field(), n));
    std::string xd = x + "*";
    Diagram right{{xd}, {{Box::id(xd), Box::coev(x)}, {Box::ev(x), Box::id(xd)}}};
    CHECK(compile(right, env) == Matrix::identity(env.field(), n));
  }
}

TEST_CASE("flip composes to the identity") {
  DiagramEnv env(Field::rationals());
  env.add_object("X", 2);
  env.add_object("Y", 3);
  Diagram d{{"X", "Y"}, {{Box::flip("X", "Y")}, {Box::flip("Y", "X")}}};
  CHECK(compile(d, env) == Matrix::identity(env.field(), 6));
}

TEST_CASE("unit law and antipode axiom as diagram equalities") {
  Field f = Field::rationals();
  DiagramEnv env(f);
  env.register_hopf("H", testutil::taft4(f));

  Diagram unit_then_mult{{"H"}, {{Box::unit("H"), Box::id("H")}, {Box::mult("H")}}};
  Diagram just_id{{"H"}, {{Box::id("H")}}};
  CHECK(diagrams_equal(unit_then_mult, just_id, env));

  Diagram antipode_l{{"H"},
                     {{Box::comult("H")}, {Box::antipode("H"), Box::id("H")}, {Box::mult("H")}}};
  Diagram eps_unit{{"H"}, {{Box::counit("H")}, {Box::unit("H")}}};
  CHECK(diagrams_equal(antipode_l, eps_unit, env));

  Diagram antipode_r{{"H"},
                     {{Box::comult("H")}, {Box::id("H"), Box::antipode("H")}, {Box::mult("H")}}};
  CHECK(diagrams_equal(antipode_r, eps_unit, env));
}

TEST_CASE("registered braidings differ from the flip and invert") {
  Field f = Field::rationals();
  auto h = testutil::shared(testutil::taft4(f));
  SVec r{{0, q(1, 2)}, {2, q(1, 2)}, {8, q(1, 2)}, {10, q(-1, 2)}};
  Context ctx = Context::with_r(h, r);
  Module reg = regular_module(h);

  DiagramEnv env(f);
  env.add_object("H", 4);
  env.register_braiding("H", "H", ctx.braiding(reg, reg));

  Diagram braid{{"H", "H"}, {{Box::braid("H", "H")}}};
  Diagram flip{{"H", "H"}, {{Box::flip("H", "H")}}};
  CHECK(!diagrams_equal(braid, flip, env));

  Diagram round{{"H", "H"}, {{Box::braid("H", "H")}, {Box::braid_inv("H", "H")}}};
  Diagram idid{{"H", "H"}, {{Box::id("H"), Box::id("H")}}};
  CHECK(diagrams_equal(round, idid, env));
}

TEST_CASE("compilation is functorial") {
  Field f = Field::prime(7);
  DiagramEnv env(f);
  env.add_object("A", 2);
  env.add_object("B", 2);
  Matrix m(f, 2, 2);
  m.at(0, 0) = Scalar::of(f, 3);
  m.at(0, 1) = Scalar::of(f, 1);
  m.at(1, 1) = Scalar::of(f, 5);
  Box custom = Box::custom(m, {"A"}, {"A"});

  Diagram stacked{{"A"}, {{custom}, {custom}}};
  CHECK(compile(stacked, env) == m * m);

  Diagram side_by_side{{"A", "A"}, {{custom, custom}}};
  CHECK(compile(side_by_side, env) == kron(m, m));

  // A zero-input box in mid layer contributes a Kronecker column factor.
  Matrix u(f, 2, 1);
  u.at(0, 0) = Scalar::one(f);
  Box point = Box::custom(u, {}, {"B"});
  Diagram with_point{{"A"}, {{custom, point}}};
  CHECK(compile(with_point, env) == kron(m, u));
}

TEST_CASE("wiring errors") {
  Field f = Field::rationals();
  DiagramEnv env(f);
  env.add_object("X", 2);
  env.add_object("Y", 3);
  Diagram bad{{"X"}, {{Box::id("Y")}}};
  CHECK_THROWS_AS(compile(bad, env), WireMismatch);
  Diagram unregistered{{"X", "X"}, {{Box::braid("X", "X")}}};
  CHECK_THROWS_AS(compile(unregistered, env), UnresolvedBox);
  Diagram no_alg{{"X", "X"}, {{Box::mult("X")}}};
  CHECK_THROWS_AS(compile(no_alg, env), UnresolvedBox);
  CHECK_THROWS_AS(env.dim("Z"), UnresolvedBox);
  CHECK_THROWS_AS(env.add_object("X", 5), BadInput);
}

TEST_CASE("the dual pairing reads structure constants through ev") {
  // ev after (f (x) id) applies a functional: picks matrix entries.
  Field f = Field::rationals();
  DiagramEnv env(f);
  env.register_hopf("H", testutil::group_algebra(f, 3));
  // Functional e_1^* as a custom box K -> H*.
  Matrix e1(f, 3, 1);
  e1.at(1, 0) = Scalar::one(f);
  Box functional = Box::custom(e1, {}, {"H*"});
  Diagram pick{{"H", "H"},
               {{Box::mult("H")}, {functional, Box::id("H")}, {Box::ev("H")}}};
  Matrix got = compile(pick, env);
  // Coefficient of g in g^i g^j.
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j)
      CHECK(got.at(0, i * 3 + j) == ((i + j) % 3 == 1 ? Scalar::one(f) : Scalar::zero(f)));
}

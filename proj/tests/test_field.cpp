#include <random>

#include "doctest.h"
#include "hopflab/field.hpp"

using namespace hopflab;

TEST_CASE("designated roots of unity") {
  // Oracle: value must have exact multiplicative order, and must come from the
  // smallest primitive root so it is reproducible.
  CHECK(find_root_of_unity(13, 6) == 4);
  CHECK(find_root_of_unity(3, 2) == 2);
  CHECK(find_root_of_unity(13, 4) == 8);
  CHECK(find_root_of_unity(5, 4) == 2);
  CHECK(smallest_primitive_root(13) == 2);

  for (auto [p, n] : {std::pair<long long, long long>{13, 6}, {5, 4}, {13, 4}, {7, 6}, {13, 12}}) {
    long long w = find_root_of_unity(p, n);
    Scalar s = Scalar::mod_p(w, p);
    CHECK(s.pow(n).is_one());
    for (long long k = 1; k < n; ++k)
      if (n % k == 0) CHECK(!s.pow(k).is_one());
  }
  CHECK_THROWS_AS(find_root_of_unity(13, 5), NoRoot);
  CHECK_THROWS_AS(find_root_of_unity(12, 2), BadParams);
}

TEST_CASE("rational roots of unity") {
  Field q = Field::rationals();
  CHECK(Scalar::root_of_unity(q, 1) == Scalar::rational(1));
  CHECK(Scalar::root_of_unity(q, 2) == Scalar::rational(-1));
  CHECK_THROWS_AS(Scalar::root_of_unity(q, 4), NoRoot);
}

namespace {

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_rational()) {
    std::uniform_int_distribution<long long> num(-9, 9), den(1, 9);
    return Scalar::rational(num(rng), den(rng));
  }
  std::uniform_int_distribution<long long> d(0, f.p - 1);
  return Scalar::mod_p(d(rng), f.p);
}

void field_axioms(const Field& f) {
  std::mt19937_64 rng(0);
  Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  for (int it = 0; it < 1000; ++it) {
    Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK(a / a == one);
    }
  }
}

}  // namespace

TEST_CASE("field axioms on random triples") {
  field_axioms(Field::rationals());
  field_axioms(Field::prime(13));
  field_axioms(Field::prime(5));
}

TEST_CASE("scalar basics") {
  CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
  CHECK(Scalar::rational(-6, 3).str() == "-2");
  CHECK(Scalar::rational(1, 3).str() == "1/3");
  CHECK(Scalar::mod_p(-1, 13).residue() == 12);
  CHECK(Scalar::mod_p(4, 13).pow(-1) == Scalar::mod_p(10, 13));
  CHECK(Scalar::rational(2).pow(10) == Scalar::rational(1024));
  CHECK(Scalar::rational(2).pow(-2) == Scalar::rational(1, 4));
  CHECK_THROWS_AS(Scalar::rational(1).inverse() * Scalar::mod_p(1, 5), FieldMismatch);
  CHECK_THROWS_AS(Scalar::zero(Field::prime(5)).inverse(), DivisionByZero);
}

TEST_CASE("scalar parsing round trip") {
  Field q = Field::rationals(), f13 = Field::prime(13);
  auto a = Scalar::parse(q, "-22/7");
  REQUIRE(a.has_value());
  CHECK(*a == Scalar::rational(-22, 7));
  CHECK(Scalar::parse(q, a->str()) == a);
  auto b = Scalar::parse(f13, "25");
  REQUIRE(b.has_value());
  CHECK(b->residue() == 12);
  auto c = Scalar::parse(f13, "1/2");
  REQUIRE(c.has_value());
  CHECK(c->residue() == 7);
  CHECK(!Scalar::parse(q, "abc").has_value());
  CHECK(!Scalar::parse(f13, "1/0").has_value());
  CHECK(!Scalar::parse(q, "").has_value());
}

TEST_CASE("field equality and description") {
  CHECK(Field::rationals() == Field::rationals());
  CHECK(Field::prime(13) == Field::prime_with_root(13, 6));
  CHECK(Field::rationals() != Field::prime(13));
  CHECK(Field::prime_with_root(13, 6).omega == 4);
}

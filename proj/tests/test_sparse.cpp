#include "doctest.h"
#include "hopflab/sparse.hpp"

using namespace hopflab;

namespace {
Scalar q(long long n, long long d = 1) { return Scalar::rational(n, d); }
}

TEST_CASE("sparse vector arithmetic") {
  SVec a{{0, q(1)}, {2, q(3)}};
  SVec b{{1, q(2)}, {2, q(-3)}};
  SVec sum = sv_add(a, b);
  CHECK(sum == SVec{{0, q(1)}, {1, q(2)}});
  CHECK(sv_sub(sum, sum).empty());
  CHECK(sv_scale(q(0), a).empty());
  CHECK(sv_scale(q(2), a) == SVec{{0, q(2)}, {2, q(6)}});

  SVec messy{{2, q(1)}, {0, q(1)}, {2, q(-1)}};
  sv_normalize(messy);
  CHECK(messy == SVec{{0, q(1)}});
}

TEST_CASE("tensor of sparse vectors uses first-factor-major flattening") {
  SVec u{{1, q(2)}};
  SVec v{{0, q(3)}, {2, q(1)}};
  SVec t = sv_tensor(u, v, 3);
  CHECK(t == SVec{{3, q(6)}, {5, q(2)}});
}

TEST_CASE("flat and split index round trip") {
  std::vector<long> legs{2, 3, 4};
  std::vector<long> idx{1, 2, 3};
  long flat = flat_index(legs, idx);
  CHECK(flat == (1 * 3 + 2) * 4 + 3);
  std::vector<long> back;
  split_index(legs, flat, back);
  CHECK(back == idx);
}

TEST_CASE("apply on legs") {
  Field f = Field::rationals();
  // m : V2 -> V2 doubles coordinate 0 and swaps.
  Matrix m = Matrix::row_major(f, 2, 2, {q(0), q(1), q(2), q(0)});
  SparseCols mc = sparse_cols(m);

  // Apply to the middle leg of a rank-3 tensor.
  std::vector<long> legs{3, 2, 3};
  SVec v{{flat_index(legs, {1, 0, 2}), q(1)}};
  SVec out = apply_on_legs(mc, legs, 1, 1, {2}, v);
  CHECK(legs == std::vector<long>{3, 2, 3});
  CHECK(out == SVec{{flat_index(legs, {1, 1, 2}), q(2)}});

  // A map consuming two legs into one.
  Matrix pair_sum(f, 2, 4);
  pair_sum.at(0, 0) = q(1);
  pair_sum.at(1, 3) = q(1);
  std::vector<long> legs2{2, 2, 5};
  SVec w{{flat_index(legs2, {1, 1, 4}), q(3)}};
  SVec out2 = apply_on_legs(sparse_cols(pair_sum), legs2, 0, 2, {2}, w);
  CHECK(legs2 == std::vector<long>{2, 5});
  CHECK(out2 == SVec{{flat_index(legs2, {1, 4}), q(3)}});
}

TEST_CASE("sparse flip agrees with dense flip") {
  Field f = Field::rationals();
  SparseCols sf = sparse_flip(f, 2, 3);
  Matrix dense = flip_map(f, 2, 3);
  for (long c = 0; c < 6; ++c) CHECK(sf.col[c] == column_to_sv(dense, c));
}

TEST_CASE("column conversions") {
  Field f = Field::prime(7);
  SVec v{{1, Scalar::mod_p(3, 7)}, {4, Scalar::mod_p(6, 7)}};
  Matrix col = sv_to_column(f, 5, v);
  CHECK(column_to_sv(col, 0) == v);
  Matrix m = columns_to_matrix(f, 5, {v, {}});
  CHECK(m.cols() == 2);
  CHECK(column_to_sv(m, 0) == v);
  CHECK(column_to_sv(m, 1).empty());
}

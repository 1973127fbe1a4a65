#pragma once

#include <memory>
#include <vector>

#include "hopflab/hopf.hpp"

// Hand-built structure constants used as oracles across the test suite.
namespace testutil {

using namespace hopflab;

inline Scalar q(long long n, long long d = 1) { return Scalar::rational(n, d); }

// Group algebra K[Z_n] on basis {g^0 .. g^(n-1)}, Delta(g^j) = g^j (x) g^j.
inline Hopf group_algebra(const Field& f, long n) {
  Hopf h;
  h.field = f;
  h.dim = n;
  h.mult = Matrix(f, n, n * n);
  h.unit = Matrix(f, n, 1);
  h.comult = Matrix(f, n * n, n);
  h.counit = Matrix(f, 1, n);
  h.antipode = Matrix(f, n, n);
  Scalar one = Scalar::one(f);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) h.mult.at((i + j) % n, i * n + j) = one;
  h.unit.at(0, 0) = one;
  for (long j = 0; j < n; ++j) {
    h.comult.at(j * n + j, j) = one;
    h.counit.at(0, j) = one;
    h.antipode.at((n - j) % n, j) = one;
  }
  return h;
}

// The 4-dimensional Hopf algebra generated by a group-like g and a
// skew-primitive x with g^2 = 1, x^2 = 0, x g = -g x,
// Delta(x) = 1 (x) x + x (x) g.  Basis {1, x, g, gx} (exponent-major).
inline Hopf taft4(const Field& f) {
  Hopf h;
  h.field = f;
  h.dim = 4;
  h.mult = Matrix(f, 4, 16);
  h.unit = Matrix(f, 4, 1);
  h.comult = Matrix(f, 16, 4);
  h.counit = Matrix(f, 1, 4);
  h.antipode = Matrix(f, 4, 4);
  Scalar one = Scalar::one(f);
  auto idx = [](long j, long s) { return j * 2 + s; };
  for (long j = 0; j < 2; ++j)
    for (long a = 0; a < 2; ++a)
      for (long k = 0; k < 2; ++k)
        for (long b = 0; b < 2; ++b) {
          if (a + b > 1) continue;
          Scalar c = (k * a) % 2 ? -one : one;
          h.mult.at(idx((j + k) % 2, a + b), idx(j, a) * 4 + idx(k, b)) = c;
        }
  h.unit.at(0, 0) = one;
  // Delta: 1 -> 1 (x) 1, g -> g (x) g, x -> 1 (x) x + x (x) g, gx -> g (x) gx + gx (x) 1.
  long e1 = idx(0, 0), ex = idx(0, 1), eg = idx(1, 0), egx = idx(1, 1);
  h.comult.at(e1 * 4 + e1, e1) = one;
  h.comult.at(eg * 4 + eg, eg) = one;
  h.comult.at(e1 * 4 + ex, ex) = one;
  h.comult.at(ex * 4 + eg, ex) = one;
  h.comult.at(eg * 4 + egx, egx) = one;
  h.comult.at(egx * 4 + e1, egx) = one;
  h.counit.at(0, e1) = one;
  h.counit.at(0, eg) = one;
  // S: 1 -> 1, g -> g, x -> gx, gx -> -x.
  h.antipode.at(e1, e1) = one;
  h.antipode.at(eg, eg) = one;
  h.antipode.at(egx, ex) = one;
  h.antipode.at(ex, egx) = -one;
  return h;
}

inline HopfPtr shared(Hopf h) { return std::make_shared<Hopf>(std::move(h)); }

}  // namespace testutil

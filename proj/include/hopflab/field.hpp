#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hopflab/errors.hpp"

namespace hopflab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact coefficient fields: Q, or F_p with an optional designated root of
// unity.  The designated root of order n over F_p is g^((p-1)/n) for g the
// smallest primitive root mod p, so it is reproducible across runs.
struct Field {
  enum class Kind { rational, prime };

  Kind kind = Kind::rational;
  long long p = 0;            // modulus, 0 for Q
  long long omega_order = 0;  // order of the designated root, 0 if none chosen
  long long omega = 0;        // its residue (prime fields only)

  static Field rationals();
  static Field prime(long long p);
  static Field prime_with_root(long long p, long long order);

  bool is_rational() const { return kind == Kind::rational; }
  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }
  std::string str() const;
};

bool is_prime_number(long long n);
long long smallest_primitive_root(long long p);
// Designated root of unity of the given order; throws NoRoot if order does not
// divide p-1.
long long find_root_of_unity(long long p, long long order);

class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar rational(BigRat v);
  static Scalar rational(long long num, long long den = 1);
  static Scalar mod_p(long long v, long long p);
  static Scalar of(const Field& f, long long n);
  static Scalar zero(const Field& f) { return of(f, 0); }
  static Scalar one(const Field& f) { return of(f, 1); }
  // Designated root of unity of the given order in f (for Q: 1 or -1).
  static Scalar root_of_unity(const Field& f, long long order);
  static std::optional<Scalar> parse(const Field& f, const std::string& text);

  bool is_rational_kind() const { return p_ == 0; }
  long long modulus() const { return p_; }
  bool is_zero() const;
  bool is_one() const;
  const BigRat& rational_value() const { return q_; }
  long long residue() const { return r_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(long long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_same(const Scalar& o) const;

  long long p_ = 0;  // 0 = rational
  long long r_ = 0;  // residue in [0, p)
  BigRat q_;         // value when rational
};

}  // namespace hopflab

#include "hopflab/field.hpp"

#include <vector>

namespace hopflab {

namespace {

long long mod_reduce(long long v, long long p) {
  long long r = v % p;
  if (r < 0) r += p;
  return r;
}

long long mul_mod(long long a, long long b, long long p) {
  return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

long long pow_mod(long long base, long long e, long long p) {
  long long acc = 1 % p;
  long long b = mod_reduce(base, p);
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, b, p);
    b = mul_mod(b, b, p);
    e >>= 1;
  }
  return acc;
}

long long inv_mod(long long a, long long p) {
  long long t = 0, new_t = 1;
  long long r = p, new_r = mod_reduce(a, p);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DivisionByZero();
  return mod_reduce(t, p);
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime_number(long long n) {
  if (n < 2) return false;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

long long smallest_primitive_root(long long p) {
  if (!is_prime_number(p)) throw BadParams("modulus " + std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  auto factors = prime_factors(p - 1);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : factors) {
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw BadParams("no primitive root found mod " + std::to_string(p));
}

long long find_root_of_unity(long long p, long long order) {
  if (order <= 0) throw BadParams("root order must be positive");
  if (!is_prime_number(p)) throw BadParams("modulus " + std::to_string(p) + " is not prime");
  if ((p - 1) % order != 0)
    throw NoRoot("order " + std::to_string(order) + " does not divide " + std::to_string(p - 1));
  if (order == 1) return 1;
  long long g = smallest_primitive_root(p);
  return pow_mod(g, (p - 1) / order, p);
}

Field Field::rationals() { return Field{Kind::rational, 0, 0, 0}; }

Field Field::prime(long long p) {
  if (!is_prime_number(p)) throw BadParams("modulus " + std::to_string(p) + " is not prime");
  return Field{Kind::prime, p, 0, 0};
}

Field Field::prime_with_root(long long p, long long order) {
  Field f = prime(p);
  f.omega_order = order;
  f.omega = find_root_of_unity(p, order);
  return f;
}

bool Field::operator==(const Field& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::rational) return true;
  return p == o.p;  // the designated root is determined by (p, order); order may differ per use
}

std::string Field::str() const {
  if (kind == Kind::rational) return "Q";
  std::string s = "F_" + std::to_string(p);
  if (omega_order > 0)
    s += " (omega_" + std::to_string(omega_order) + " = " + std::to_string(omega) + ")";
  return s;
}

Scalar Scalar::rational(BigRat v) {
  Scalar s;
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw DivisionByZero();
  return rational(BigRat(num, den));
}

Scalar Scalar::mod_p(long long v, long long p) {
  if (p <= 1) throw BadParams("modulus must be > 1");
  Scalar s;
  s.p_ = p;
  s.r_ = mod_reduce(v, p);
  return s;
}

Scalar Scalar::of(const Field& f, long long n) {
  if (f.is_rational()) return rational(n);
  return mod_p(n, f.p);
}

Scalar Scalar::root_of_unity(const Field& f, long long order) {
  if (order <= 0) throw BadParams("root order must be positive");
  if (f.is_rational()) {
    if (order == 1) return rational(1);
    if (order == 2) return rational(-1);
    throw NoRoot("Q has no root of unity of order " + std::to_string(order));
  }
  if (f.omega_order > 0 && f.omega_order == order) return mod_p(f.omega, f.p);
  return mod_p(find_root_of_unity(f.p, order), f.p);
}

std::optional<Scalar> Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  try {
    if (f.is_rational()) {
      BigRat v(text);
      return rational(v);
    }
    auto parse_int = [&](const std::string& t) -> std::optional<long long> {
      if (t.empty()) return std::nullopt;
      size_t pos = 0;
      bool neg = false;
      if (t[0] == '+' || t[0] == '-') {
        neg = t[0] == '-';
        pos = 1;
      }
      if (pos >= t.size()) return std::nullopt;
      long long acc = 0;
      for (; pos < t.size(); ++pos) {
        if (t[pos] < '0' || t[pos] > '9') return std::nullopt;
        acc = mod_reduce(acc * 10 + (t[pos] - '0'), f.p);
      }
      return neg ? mod_reduce(-acc, f.p) : acc;
    };
    if (slash == std::string::npos) {
      auto v = parse_int(text);
      if (!v) return std::nullopt;
      return mod_p(*v, f.p);
    }
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den) return std::nullopt;
    if (*den == 0) return std::nullopt;
    return mod_p(*num, f.p) / mod_p(*den, f.p);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool Scalar::is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

void Scalar::check_same(const Scalar& o) const {
  if (p_ != o.p_)
    throw FieldMismatch("scalar moduli " + std::to_string(p_) + " vs " + std::to_string(o.p_));
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (p_ == 0)
    s.q_ += o.q_;
  else
    s.r_ = mod_reduce(r_ + o.r_, p_);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s = *this;
  if (p_ == 0)
    s.q_ *= o.q_;
  else
    s.r_ = mul_mod(r_, o.r_, p_);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s = *this;
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.r_ = inv_mod(r_, p_);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  if (p_ != 0) {
    Scalar s = *this;
    s.r_ = pow_mod(r_, e, p_);
    return s;
  }
  Scalar acc = rational(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(r_);
  return q_.str();
}

}  // namespace hopflab

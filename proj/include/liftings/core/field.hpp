#pragma once

// Exact coefficient fields: the rationals (GMP-backed) and prime fields GF(p)
// with p small enough for native 64-bit products.

#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <string>
#include <utility>

#include "liftings/error.hpp"

namespace liftings {

class Rational;
class ModP;

struct RationalField {
  static constexpr bool is_field = true;

  Rational zero() const;
  Rational one() const;
  Rational from_integer(long long n) const;
  Rational from_rational(const mpq_class& q) const;
  std::uint64_t characteristic() const { return 0; }
  /// Number of elements, 0 meaning infinite.
  std::uint64_t size() const { return 0; }
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const = default;
};

/// Rational number kept in lowest terms with positive denominator.
class Rational {
 public:
  using ring_type = RationalField;

  Rational() = default;
  Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT(runtime/explicit)
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
  Rational(long long num, long long den) {
    if (den == 0) fail(ErrorKind::Argument, "rational with zero denominator");
    v_ = mpq_class(static_cast<long>(num)) / mpq_class(static_cast<long>(den));
  }

  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail(ErrorKind::Parse, "malformed rational '" + s + "'");
    if (q.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  ring_type ring() const { return {}; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational inverse() const {
    if (is_zero()) fail(ErrorKind::Argument, "inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::Argument, "division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  std::string to_string() const { return v_.get_str(); }
  /// Printing helpers shared by the polynomial printer.
  bool prints_negative() const { return sign() < 0; }
  bool is_atomic() const { return true; }

 private:
  mpq_class v_;
};

inline Rational RationalField::zero() const { return Rational(0); }
inline Rational RationalField::one() const { return Rational(1); }
inline Rational RationalField::from_integer(long long n) const { return Rational(n); }
inline Rational RationalField::from_rational(const mpq_class& q) const { return Rational(q); }

/// Deterministic primality for 32-bit moduli (trial division is enough here).
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

struct PrimeField {
  static constexpr bool is_field = true;
  static constexpr std::uint64_t kMaxModulus = (1ULL << 31) - 1;

  std::uint32_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t modulus) {
    if (modulus > kMaxModulus) fail(ErrorKind::Argument, "prime modulus too large for native arithmetic");
    if (!is_prime(modulus)) fail(ErrorKind::Argument, std::to_string(modulus) + " is not prime");
    p = static_cast<std::uint32_t>(modulus);
  }

  ModP zero() const;
  ModP one() const;
  ModP from_integer(long long n) const;
  ModP from_rational(const mpq_class& q) const;
  std::uint64_t characteristic() const { return p; }
  std::uint64_t size() const { return p; }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }
  bool operator==(const PrimeField&) const = default;
};

/// Element of GF(p); the modulus travels with the value.
class ModP {
 public:
  using ring_type = PrimeField;

  ModP() = default;
  ModP(std::uint32_t v, std::uint32_t p) : v_(v % p), p_(p) {}

  ring_type ring() const {
    PrimeField f;
    f.p = p_;
    return f;
  }
  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  ModP inverse() const {
    if (v_ == 0) fail(ErrorKind::Argument, "inverse of zero");
    // p is prime: a^(p-2)
    return pow(p_ - 2);
  }
  ModP pow(std::uint64_t e) const {
    std::uint64_t base = v_, r = 1 % p_;
    while (e) {
      if (e & 1) r = r * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return ModP(static_cast<std::uint32_t>(r), p_);
  }

  ModP& operator+=(const ModP& o) {
    check(o);
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + p_ - o.v_);
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  ModP operator-() const { return ModP(v_ == 0 ? 0 : p_ - v_, p_); }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  /// Symmetric representative in (-p/2, p/2].
  long long symmetric() const {
    return v_ > p_ / 2 ? static_cast<long long>(v_) - p_ : static_cast<long long>(v_);
  }
  std::string to_string() const { return std::to_string(symmetric()); }
  bool prints_negative() const { return symmetric() < 0; }
  bool is_atomic() const { return true; }

 private:
  void check(const ModP& o) const {
    if (p_ != o.p_) fail(ErrorKind::Ring, "mixing elements of different prime fields");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

inline ModP PrimeField::zero() const { return ModP(0, p); }
inline ModP PrimeField::one() const { return ModP(1, p); }
inline ModP PrimeField::from_integer(long long n) const {
  long long r = n % static_cast<long long>(p);
  if (r < 0) r += p;
  return ModP(static_cast<std::uint32_t>(r), p);
}
inline ModP PrimeField::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p, den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) fail(ErrorKind::Argument, "denominator vanishes in " + name());
  return ModP(static_cast<std::uint32_t>(num.get_ui()), p) / ModP(static_cast<std::uint32_t>(den.get_ui()), p);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const ModP& a) { return os << a.to_string(); }

}  // namespace liftings

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace binar {

// Exact rational scalar. Always kept in canonical form: gcd(|num|, den) = 1,
// den >= 1. All arithmetic is exact; there is no floating-point path.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long v) : v_(v) {}            // NOLINT: implicit by design
  Scalar(int v) : v_(static_cast<long>(v)) {}
  explicit Scalar(mpz_class v) : v_(std::move(v)) {}
  explicit Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Scalar(const mpz_class& num, const mpz_class& den);

  // Parses "p" or "p/q" with optional leading sign. Throws std::invalid_argument.
  static Scalar parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Canonical serialization: integers as plain decimal, otherwise "p/q".
  std::string str() const;

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  mpq_class v_;
};

Scalar abs(const Scalar& s);

}  // namespace binar

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "kleinfour/field.hpp"

namespace kleinfour {

// Arbitrary-precision rational, always in canonical form: gcd(|num|, den) = 1
// and den > 0. Equality is structural.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors field literals
  Rational(long num, long den);
  explicit Rational(const std::string& text);  // "n" or "n/d"
  explicit Rational(mpq_class v);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const;
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

// x is a square in Q iff x >= 0 and, in canonical form, both numerator and
// denominator are perfect integer squares. Note that 0 counts as a square.
bool rational_is_square(const Rational& x);

// The non-negative root, when one exists in Q.
std::optional<Rational> rational_sqrt(const Rational& x);

// The field Q. Stateless: every Rational belongs to the one context.
struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_square(const Elem& a) const { return rational_is_square(a); }
  std::optional<Elem> sqrt(const Elem& a) const { return rational_sqrt(a); }
  Elem from_int(long n) const { return Rational(n); }
  bool finite() const { return false; }
  std::uint64_t characteristic() const { return 0; }
  int cmp(const Elem& a, const Elem& b) const { return ::cmp(a.raw(), b.raw()); }
  std::string to_string(const Elem& a) const { return a.str(); }
};

static_assert(OrderedFieldContext<RationalField>);

}  // namespace kleinfour

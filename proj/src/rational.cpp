#include "kleinfour/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace kleinfour {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const std::string& text) {
  if (v_.set_str(text, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  if (sgn(v_.get_den()) == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

std::string Rational::str() const { return v_.get_str(); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

bool rational_is_square(const Rational& x) {
  if (x.sign() < 0) return false;
  return mpz_perfect_square_p(x.num().get_mpz_t()) && mpz_perfect_square_p(x.den().get_mpz_t());
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (!rational_is_square(x)) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), x.num().get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), x.den().get_mpz_t());
  return Rational(mpq_class(rn) / mpq_class(rd));
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (a.is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(1) / a;
}

}  // namespace kleinfour

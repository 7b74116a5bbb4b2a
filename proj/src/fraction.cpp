#include "bridgestate/fraction.hpp"

#include <algorithm>
#include <ostream>

#include "bridgestate/errors.hpp"

namespace bridgestate {

Fraction::Fraction(const Integer& p, const Integer& q) {
  if (q == 0) throw InvalidInput("fraction with zero denominator");
  value_ = mpq_class(p, q);
  value_.canonicalize();
}

Fraction Fraction::dyadic(const Integer& num, unsigned long exponent) {
  Fraction r;
  if (num == 0) return r;
  const unsigned long shift = std::min<unsigned long>(mpz_scan1(num.get_mpz_t(), 0), exponent);
  mpz_tdiv_q_2exp(r.value_.get_num_mpz_t(), num.get_mpz_t(), shift);
  mpz_set_ui(r.value_.get_den_mpz_t(), 1);
  mpz_mul_2exp(r.value_.get_den_mpz_t(), r.value_.get_den_mpz_t(), exponent - shift);
  return r;
}

Integer Fraction::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

Integer Fraction::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

Fraction Fraction::abs() const {
  Fraction r;
  r.value_ = ::abs(value_);
  return r;
}

Fraction Fraction::reciprocal() const {
  if (is_zero()) throw InvalidInput("reciprocal of zero");
  Fraction r;
  mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

Fraction& Fraction::operator/=(const Fraction& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  value_ /= o.value_;
  return *this;
}

Fraction frac(const Integer& p, const Integer& q) { return Fraction(p, q); }

Fraction frac(std::int64_t p, std::int64_t q) { return Fraction(Integer(p), Integer(q)); }

bool is_reduced(const Fraction& x) {
  const Integer num = x.numerator();
  const Integer den = x.denominator();
  if (den < 1) return false;
  if (num == 0) return den == 1;
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return g == 1;
}

std::ostream& operator<<(std::ostream& os, const Fraction& x) { return os << x.to_string(); }

}  // namespace bridgestate

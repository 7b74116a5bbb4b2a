#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace bridgestate {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Fraction {
 public:
  Fraction() = default;
  Fraction(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Fraction(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Fraction(long long value) : value_(Integer(std::to_string(value))) {}  // NOLINT
  Fraction(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// p/q reduced. Throws InvalidInput when q == 0.
  Fraction(const Integer& p, const Integer& q);

  /// num / 2^exponent, reduced by shifting rather than a general gcd.
  static Fraction dyadic(const Integer& num, unsigned long exponent);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Integer floor() const;
  Integer ceil() const;
  Fraction abs() const;
  /// Throws InvalidInput on zero.
  Fraction reciprocal() const;

  Fraction& operator+=(const Fraction& o) { value_ += o.value_; return *this; }
  Fraction& operator-=(const Fraction& o) { value_ -= o.value_; return *this; }
  Fraction& operator*=(const Fraction& o) { value_ *= o.value_; return *this; }
  Fraction& operator/=(const Fraction& o);

  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }
  Fraction operator-() const { Fraction r; r.value_ = -value_; return r; }

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" or "p/q".
  std::string to_string() const { return value_.get_str(); }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

/// Reduced p/q; throws InvalidInput when q == 0.
Fraction frac(const Integer& p, const Integer& q);
Fraction frac(std::int64_t p, std::int64_t q);

/// True when gcd(|num|, den) == 1 and den >= 1, recomputed from scratch.
bool is_reduced(const Fraction& x);

std::ostream& operator<<(std::ostream& os, const Fraction& x);

}  // namespace bridgestate

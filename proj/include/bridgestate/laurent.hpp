#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bridgestate/fraction.hpp"

namespace bridgestate {

/// Exact polynomial in t and t^-1 with rational coefficients.
///
/// Stored densely, lowest degree first, with zero coefficients trimmed from
/// both ends; the zero polynomial has no coefficients and min_degree 0.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int constant) : LaurentPolynomial(Fraction(constant)) {}  // NOLINT
  LaurentPolynomial(const Fraction& constant);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(int min_degree, std::vector<Fraction> coefficients);

  /// c * t^degree
  static LaurentPolynomial monomial(const Fraction& c, int degree);
  /// The indeterminate t.
  static LaurentPolynomial t() { return monomial(Fraction(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const { return min_degree_; }
  /// Highest exponent present; equals min_degree() for the zero polynomial.
  int max_degree() const { return min_degree_ + static_cast<int>(coeffs_.size()) - (is_zero() ? 0 : 1); }
  /// max_degree - min_degree; 0 for constants and for zero.
  int span() const { return max_degree() - min_degree(); }
  std::span<const Fraction> coefficients() const { return coeffs_; }
  /// Coefficient of t^degree (zero outside the stored range).
  Fraction coefficient(int degree) const;
  const Fraction& lowest() const { return coeffs_.front(); }
  const Fraction& highest() const { return coeffs_.back(); }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

  /// Multiplies by t^shift.
  LaurentPolynomial shifted(int shift) const;

  std::string to_string() const;

 private:
  void normalize();
  void accumulate(const LaurentPolynomial& b, bool subtract);

  int min_degree_ = 0;
  std::vector<Fraction> coeffs_;
};

/// Exact value at x. Throws InvalidInput for x == 0 when negative powers are present.
Fraction laurent_eval(const LaurentPolynomial& p, const Fraction& x);

/// p(t^-1).
LaurentPolynomial laurent_reciprocal_substitute(const LaurentPolynomial& p);

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

}  // namespace bridgestate

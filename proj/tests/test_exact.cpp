#include <random>

#include "bridgestate/errors.hpp"
#include "bridgestate/fraction.hpp"
#include "bridgestate/laurent.hpp"
#include "doctest.h"

using namespace bridgestate;

namespace {

LaurentPolynomial poly(int min_degree, std::vector<Fraction> cs) { return LaurentPolynomial(min_degree, std::move(cs)); }

LaurentPolynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(-4, 4), len(0, 6), num(-9, 9), den(1, 4);
  std::vector<Fraction> cs(static_cast<std::size_t>(len(rng)));
  for (auto& c : cs) c = frac(num(rng), den(rng));
  return poly(deg(rng), cs);
}

Fraction random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 7), den(1, 5);
  std::bernoulli_distribution neg(0.5);
  return frac(neg(rng) ? -num(rng) : num(rng), den(rng));
}

}  // namespace

TEST_CASE("frac reduces and normalizes sign") {
  CHECK(frac(6, 4) == frac(3, 2));
  CHECK(frac(6, 4).numerator() == 3);
  CHECK(frac(6, 4).denominator() == 2);
  CHECK(frac(0, 5).numerator() == 0);
  CHECK(frac(0, 5).denominator() == 1);
  CHECK(frac(7, -3).numerator() == -7);
  CHECK(frac(7, -3).denominator() == 3);
  CHECK_THROWS_AS(frac(1, 0), InvalidInput);
}

TEST_CASE("fraction floor, ceil and division") {
  CHECK(frac(7, 3).floor() == 2);
  CHECK(frac(7, 3).ceil() == 3);
  CHECK(frac(-7, 4).floor() == -2);
  CHECK(frac(-7, 4).ceil() == -1);
  CHECK_THROWS_AS(Fraction(3) / Fraction(0), InvalidInput);
  CHECK_THROWS_AS(Fraction(0).reciprocal(), InvalidInput);
  CHECK(Fraction::dyadic(Integer(12), 3) == frac(3, 2));
  CHECK(Fraction::dyadic(Integer(-5), 2) == frac(-5, 4));
  CHECK(Fraction::dyadic(Integer(0), 7).is_zero());
}

TEST_CASE("laurent arithmetic") {
  const LaurentPolynomial one_minus_t = poly(0, {1, -1});
  CHECK(one_minus_t * one_minus_t == poly(0, {1, -2, 1}));
  const LaurentPolynomial p = poly(-2, {frac(1, 2), 0, 3, -4});
  CHECK((p + (-p)).is_zero());
  CHECK((p - p).is_zero());
  CHECK(LaurentPolynomial::monomial(1, -1) * LaurentPolynomial::t() == LaurentPolynomial(1));
  CHECK(poly(0, {0, 0, 2, 0}).min_degree() == 2);
  CHECK(poly(0, {0, 0, 2, 0}).span() == 0);
  CHECK(poly(3, {0, 0}).is_zero());
}

TEST_CASE("laurent evaluation") {
  CHECK(laurent_eval(poly(0, {2, -3, 2}), Fraction(-1)) == Fraction(7));
  CHECK(laurent_eval(poly(0, {frac(-3, 2), 4, frac(-3, 2)}), Fraction(1)) == Fraction(1));
  CHECK(laurent_eval(LaurentPolynomial(), frac(5, 3)).is_zero());
  CHECK(laurent_eval(LaurentPolynomial(), Fraction(0)).is_zero());
  CHECK(laurent_eval(poly(-2, {1, 0, 1}), Fraction(2)) == frac(5, 4));
  CHECK_THROWS_AS(laurent_eval(poly(-1, {1, 1}), Fraction(0)), InvalidInput);
  CHECK(laurent_eval(poly(0, {4, 1}), Fraction(0)) == Fraction(4));
}

TEST_CASE("reciprocal substitution") {
  const auto r = laurent_reciprocal_substitute(poly(0, {2, -3, 2}));
  CHECK(r == poly(-2, {2, -3, 2}));
  CHECK(laurent_reciprocal_substitute(LaurentPolynomial(frac(5, 7))) == LaurentPolynomial(frac(5, 7)));
  CHECK(laurent_reciprocal_substitute(poly(0, {1, 0, 0, 1})) == poly(-3, {1, 0, 0, 1}));
}

TEST_CASE("to_string") {
  CHECK(poly(0, {frac(3, 2), -4, frac(3, 2)}).to_string() == "3/2 - 4t + 3/2t^2");
  CHECK(poly(-1, {-1, 0, 1}).to_string() == "-t^-1 + t");
  CHECK(LaurentPolynomial().to_string() == "0");
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng);
    const auto q = random_poly(rng);
    const auto x = random_nonzero(rng);
    CHECK(laurent_eval(p * q, x) == laurent_eval(p, x) * laurent_eval(q, x));
    CHECK(laurent_eval(p + q, x) == laurent_eval(p, x) + laurent_eval(q, x));
    // p(1/x) two ways
    CHECK(laurent_eval(laurent_reciprocal_substitute(p), x) == laurent_eval(p, x.reciprocal()));
  }
}

TEST_CASE("property: reciprocal substitution is an involution and outputs stay reduced") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng);
    const auto q = random_poly(rng);
    CHECK(laurent_reciprocal_substitute(laurent_reciprocal_substitute(p)) == p);
    for (const auto& r : {p * q, p + q, p - q, -p, laurent_reciprocal_substitute(p)}) {
      for (const auto& c : r.coefficients()) CHECK(is_reduced(c));
      if (!r.is_zero()) {
        CHECK_FALSE(r.lowest().is_zero());
        CHECK_FALSE(r.highest().is_zero());
        CHECK(r.span() + 1 == static_cast<int>(r.coefficients().size()));
      }
    }
  }
}

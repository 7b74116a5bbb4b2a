#pragma once

// Dense square matrices over the exact scalars, plus the few generic
// algorithms the invariants need. Everything is exact; nothing here pivots
// on magnitude.

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "bridgestate/errors.hpp"
#include "bridgestate/fraction.hpp"
#include "bridgestate/laurent.hpp"

namespace Eigen {

template <>
struct NumTraits<bridgestate::Fraction> : GenericNumTraits<bridgestate::Fraction> {
  using Real = bridgestate::Fraction;
  using NonInteger = bridgestate::Fraction;
  using Nested = bridgestate::Fraction;
  using Literal = bridgestate::Fraction;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  // Exact values print in full; no precision to report.
  static constexpr int digits10() { return 0; }
  static constexpr int max_digits10() { return 0; }
};

template <>
struct NumTraits<bridgestate::LaurentPolynomial> : GenericNumTraits<bridgestate::LaurentPolynomial> {
  using Real = bridgestate::LaurentPolynomial;
  using NonInteger = bridgestate::LaurentPolynomial;
  using Nested = bridgestate::LaurentPolynomial;
  using Literal = bridgestate::LaurentPolynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 64
  };
  static constexpr int digits10() { return 0; }
  static constexpr int max_digits10() { return 0; }
};

}  // namespace Eigen

namespace bridgestate {

template <typename Scalar>
using Square = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_zero(const Fraction& x) { return x.is_zero(); }
inline bool is_zero(const LaurentPolynomial& p) { return p.is_zero(); }

namespace detail {

template <typename Scalar>
Scalar laplace(const Square<Scalar>& m, Eigen::Index row, std::vector<bool>& used) {
  const Eigen::Index n = m.rows();
  if (row == n) return Scalar(1);
  Scalar acc(0);
  int parity = 0;  // number of unused columns to the left of c
  for (Eigen::Index c = 0; c < n; ++c) {
    if (used[static_cast<std::size_t>(c)]) continue;
    if (!is_zero(m(row, c))) {
      used[static_cast<std::size_t>(c)] = true;
      Scalar term = m(row, c) * laplace(m, row + 1, used);
      used[static_cast<std::size_t>(c)] = false;
      if (parity % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    ++parity;
  }
  return acc;
}

}  // namespace detail

/// Determinant by full Laplace expansion along successive rows. Exponential
/// in the size; zero entries are skipped. Intended as an independent check
/// for small matrices only.
template <typename Scalar>
Scalar cofactor_determinant(const Square<Scalar>& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  std::vector<bool> used(static_cast<std::size_t>(m.cols()), false);
  return detail::laplace(m, 0, used);
}

/// V - t V^T over Laurent polynomials.
inline Square<LaurentPolynomial> seifert_form_pencil(const Square<Fraction>& v) {
  const Eigen::Index n = v.rows();
  Square<LaurentPolynomial> out(n, n);
  const LaurentPolynomial t = LaurentPolynomial::t();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = LaurentPolynomial(v(i, j)) - t * LaurentPolynomial(v(j, i));
  return out;
}

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const { return positive - negative; }
};

/// Inertia of a symmetric rational matrix by exact congruence
/// (symmetric Gaussian elimination). Throws InvalidInput if not symmetric.
Inertia symmetric_inertia(Square<Fraction> m);

bool is_symmetric(const Square<Fraction>& m);
/// Nonzero entries only on the main, sub- and super-diagonals.
bool is_tridiagonal(const Square<Fraction>& m);

}  // namespace bridgestate

#pragma once

#include <cstdint>
#include <vector>

#include "bridgestate/laurent.hpp"
#include "bridgestate/state_matrix.hpp"
#include "bridgestate/surfaces.hpp"

namespace bridgestate {

/// Representative of a Laurent polynomial up to units +-t^j: shifted so the
/// lowest exponent is 0 and negated if the lowest coefficient is negative.
LaurentPolynomial canonical_form(const LaurentPolynomial& p);

/// p == +-t^j q for some j.
bool poly_equivalent(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// State polynomial of a surface, held in canonical form.
struct StatePolynomial {
  LaurentPolynomial canonical;
  int k = 0;

  /// 2^k times each canonical coefficient, lowest degree first. Always integral.
  std::vector<Integer> scaled_coefficients() const;
  /// Inverse of scaled_coefficients(); throws InvalidInput on a zero list.
  static StatePolynomial from_scaled(int k, int min_degree, const std::vector<Integer>& scaled);

  friend bool operator==(const StatePolynomial&, const StatePolynomial&) = default;
};

/// det(V - tV^T) for the standard state matrix of e, uncanonicalized, by the
/// tridiagonal three-term recurrence.
LaurentPolynomial state_determinant(const Expansion& e);

StatePolynomial state_polynomial(const Expansion& e);

/// Default size bound for the cofactor oracle, overridable through
/// BRIDGESTATE_ORACLE_MAX_K.
constexpr int kDefaultOracleMaxK = 8;
int oracle_max_k_from_env();

/// det(V - tV^T) by cofactor expansion. Refuses matrices larger than max_k.
LaurentPolynomial state_polynomial_oracle(const StateMatrix& v, int max_k = kDefaultOracleMaxK);

/// N+ - N-.
int state_signature(const Expansion& e);

/// Signature of a symmetric tridiagonal matrix from its leading principal
/// minors. `diagonal` has k entries, `coupling[j]` is the product of the two
/// off-diagonal entries between rows j and j+1. Throws ConsistencyError on a
/// vanishing minor.
int tridiagonal_signature(const std::vector<Integer>& diagonal, const std::vector<Integer>& coupling);

/// Signature of a tridiagonal Gordon-Litherland matrix via its minors.
int state_signature_minors(const GLMatrix& gl);

int knot_signature(const TwoBridgeKnot& knot);

/// 2(sigma_S - sigma(K)). Throws InvalidInput if e is not a surface of knot.
int boundary_slope(const Expansion& e, const TwoBridgeKnot& knot);

/// 2(N+ - N-) - 2(N+_0 - N-_0) from the sign counts alone.
int boundary_slope_ht(const Expansion& e, const Expansion& seifert);

StatePolynomial alexander_polynomial(const TwoBridgeKnot& knot);
int knot_genus_twice(const TwoBridgeKnot& knot);
/// Twice the crosscap number.
int nonorientable_genus_twice(const TwoBridgeKnot& knot);

struct SurfaceRecord {
  Expansion expansion;
  bool orientable = false;
  int genus_twice = 0;
  SignCounts signs;
  StatePolynomial state_polynomial;
  int state_signature = 0;
  int boundary_slope = 0;

  friend bool operator==(const SurfaceRecord&, const SurfaceRecord&) = default;
};

struct InvariantReport {
  TwoBridgeKnot knot;
  std::vector<SurfaceRecord> surfaces;
  std::int64_t determinant = 0;
  int knot_signature = 0;
  StatePolynomial alexander;
  int genus_twice = 0;
  int nonorientable_genus_twice = 0;

  /// Slopes of all surfaces, ascending.
  std::vector<int> slopes() const;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Computes everything and checks, before returning, that every surface has
/// |Delta_S(-1)| = alpha, that the minor signature matches N+ - N-, and that
/// both slope formulas agree. Throws ConsistencyError otherwise.
InvariantReport full_report(const TwoBridgeKnot& knot);

}  // namespace bridgestate

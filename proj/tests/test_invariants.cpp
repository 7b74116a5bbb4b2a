#include <cstdlib>
#include <random>

#include "bridgestate/errors.hpp"
#include "bridgestate/invariants.hpp"
#include "bridgestate/verify.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bridgestate;
using Terms = std::vector<std::int64_t>;

namespace {

LaurentPolynomial poly(std::vector<Fraction> cs, int min_degree = 0) { return LaurentPolynomial(min_degree, std::move(cs)); }

StateMatrix mat2(Fraction a, Fraction b, Fraction c, Fraction d) {
  StateMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Expansion alternating_tail(std::int64_t head, int length) {
  // [head, -2, 2, -2, ...] of the given length
  Expansion e{{head}};
  for (int i = 1; i < length; ++i) e.terms.push_back(i % 2 == 1 ? -2 : 2);
  return e;
}

}  // namespace

TEST_CASE("state_polynomial examples") {
  CHECK(state_polynomial({{2, 3}}).canonical == poly({frac(3, 2), -4, frac(3, 2)}));
  CHECK(state_polynomial({{-2, 4}}).canonical == poly({2, -3, 2}));
  for (std::int64_t m : {3, 5, 8}) CHECK(state_polynomial({{m}}).canonical == poly({frac(m, 2), frac(-m, 2)}));
  CHECK(state_polynomial({{2, 3}}).k == 2);
}

TEST_CASE("cofactor oracle examples") {
  const StateMatrix v = standard_state_matrix({{2, 3}});
  CHECK(state_polynomial_oracle(v) == poly({frac(-3, 2), 4, frac(-3, 2)}));
  CHECK(poly_equivalent(state_polynomial_oracle(flip_normal(v, 0)), state_polynomial_oracle(v)));
  // The symmetric matrix of the isotopic 5_2 surface gives a different class.
  const StateMatrix symmetric = mat2(frac(1, 2), 1, 1, frac(-3, 2));
  const LaurentPolynomial sym = state_polynomial_oracle(symmetric);
  CHECK(sym == poly({1, -2, 1}) * LaurentPolynomial(frac(-7, 4)));
  CHECK_FALSE(poly_equivalent(sym, state_polynomial({{2, 3}}).canonical));
  CHECK(canonical_form(sym) == poly({frac(7, 4), frac(-7, 2), frac(7, 4)}));
}

TEST_CASE("cofactor oracle refuses large matrices") {
  const StateMatrix v = standard_state_matrix(alternating_tail(3, 9));
  CHECK_THROWS_AS(state_polynomial_oracle(v), InvalidInput);
  CHECK_NOTHROW(state_polynomial_oracle(v, 9));
}

TEST_CASE("oracle bound from the environment") {
  ::unsetenv("BRIDGESTATE_ORACLE_MAX_K");
  CHECK(oracle_max_k_from_env() == 8);
  ::setenv("BRIDGESTATE_ORACLE_MAX_K", "5", 1);
  CHECK(oracle_max_k_from_env() == 5);
  ::setenv("BRIDGESTATE_ORACLE_MAX_K", "five", 1);
  CHECK_THROWS_AS(oracle_max_k_from_env(), InvalidInput);
  ::unsetenv("BRIDGESTATE_ORACLE_MAX_K");
}

TEST_CASE("poly_equivalent") {
  CHECK(poly_equivalent(poly({-1, 3, -1}), poly({1, -3, 1})));
  CHECK_FALSE(poly_equivalent(poly({1, -1}), poly({1, 1})));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = oracle::random_terms(rng, 6, 7);
    const auto p = state_determinant({t});
    CHECK(poly_equivalent(p * LaurentPolynomial::t(), p));
    CHECK(poly_equivalent(p.shifted(-3), -p));
  }
}

TEST_CASE("state_signature") {
  for (int m = 1; m <= 5; ++m) CHECK(state_signature(alternating_tail(3, 2 * m)) == 2 * m);
  for (std::int64_t l = 1; l <= 5; ++l) CHECK(state_signature({{3, 2 * l}}) == 0);
  CHECK(state_signature({{7}}) == 1);
}

TEST_CASE("state_signature_minors") {
  CHECK(state_signature_minors(gl_matrix(standard_state_matrix({{-2, 4}}))) == -2);
  CHECK(state_signature_minors(gl_matrix(standard_state_matrix({{2, 2}}))) == 0);
  CHECK(state_signature_minors(gl_matrix(standard_state_matrix({{5}}))) == 1);
  CHECK(state_signature_minors(gl_matrix(standard_state_matrix({{-5}}))) == -1);
  // diag(1, -1) padded so a leading minor vanishes: [[0,1],[1,0]]
  StateMatrix singular_minor(2, 2);
  singular_minor << 0, 1, 1, 0;
  CHECK_THROWS_AS(state_signature_minors(singular_minor), ConsistencyError);
  StateMatrix not_symmetric(2, 2);
  not_symmetric << 1, 1, 0, 1;
  CHECK_THROWS_AS(state_signature_minors(not_symmetric), InvalidInput);
}

TEST_CASE("knot signature on the K(4m+1,2m) and K(6l+1,2l) families and the trefoil") {
  for (std::int64_t m = 1; m <= 6; ++m) CHECK(knot_signature({4 * m + 1, 2 * m}) == 0);
  for (std::int64_t l = 1; l <= 6; ++l) CHECK(knot_signature({6 * l + 1, 2 * l}) == 2 * l);
  CHECK(knot_signature({3, 1}) == -2);
}

TEST_CASE("boundary slopes") {
  CHECK(boundary_slope({{3}}, {3, 1}) == 6);
  CHECK(boundary_slope({{2, 2}}, {5, 2}) == 0);
  CHECK(boundary_slope({{3, -2}}, {5, 2}) == 4);
  CHECK(boundary_slope({{-2, 3}}, {5, 2}) == -4);
  CHECK_THROWS_AS(boundary_slope({{3}}, {5, 2}), InvalidInput);
  CHECK_THROWS_AS(boundary_slope({{2, 2}}, {4, 1}), InvalidInput);

  CHECK(boundary_slope_ht({{3}}, {{-2, 2}}) == 6);
  CHECK(boundary_slope_ht({{-2, 4}}, {{-2, 4}}) == 0);
  CHECK(boundary_slope_ht({{3, -2, 2}}, {{-2, 4}}) == 10);
  CHECK(boundary_slope({{3, -2, 2}}, {7, 3}) == 10);
  CHECK_THROWS_AS(boundary_slope_ht({{3}}, {{3}}), InvalidInput);
}

TEST_CASE("Alexander polynomial and genera") {
  CHECK(alexander_polynomial({3, 1}).canonical == poly({1, -1, 1}));
  CHECK(alexander_polynomial({5, 2}).canonical == poly({1, -3, 1}));
  CHECK(alexander_polynomial({7, 3}).canonical == poly({2, -3, 2}));
  for (std::int64_t m = 3; m <= 15; m += 2) CHECK(knot_genus_twice({m, 1}) == m - 1);
  CHECK(knot_genus_twice({5, 2}) == 2);
  for (std::int64_t i = 1; i <= 3; ++i)
    for (std::int64_t j = 1; j <= 3; ++j) {
      // [2i, 2j] = (4ij + 1) / (2j)
      const Expansion e{{2 * i, 2 * j}};
      CHECK(cf_value(e) == frac(4 * i * j + 1, 2 * j));
      CHECK(knot_genus_twice({4 * i * j + 1, 2 * j}) == 2);
    }
}

TEST_CASE("nonorientable genus") {
  CHECK(nonorientable_genus_twice({3, 1}) == 1);
  CHECK(nonorientable_genus_twice({5, 2}) == 2);
  // Find a knot whose nonorientable surfaces are all of genus above g + 1/2.
  bool found_fallback = false;
  for (const auto& k : knots_up_to(99)) {
    const auto surfaces = essential_surfaces(k);
    const int g2 = find_seifert(surfaces).genus_twice;
    int best = 1 << 20;
    for (const auto& s : surfaces)
      if (!s.orientable) best = std::min(best, s.genus_twice);
    CHECK(nonorientable_genus_twice(k) == std::min(best, g2 + 1));
    if (best > g2 + 1) {
      found_fallback = true;
      CHECK(nonorientable_genus_twice(k) == g2 + 1);
    }
  }
  CHECK(found_fallback);
}

TEST_CASE("full_report examples") {
  const auto fig8 = full_report({5, 2});
  CHECK(fig8.surfaces.size() == 3);
  CHECK(fig8.slopes() == std::vector<int>{-4, 0, 4});
  std::vector<int> sigs;
  for (const auto& s : fig8.surfaces) sigs.push_back(s.state_signature);
  std::sort(sigs.begin(), sigs.end());
  CHECK(sigs == std::vector<int>{-2, 0, 2});
  CHECK(fig8.determinant == 5);

  const auto five2 = full_report({7, 3});
  CHECK(five2.surfaces.size() == 3);
  CHECK(five2.slopes() == std::vector<int>{0, 4, 10});
  for (const auto& s : five2.surfaces) CHECK(laurent_eval(s.state_polynomial.canonical, Fraction(-1)).abs() == Fraction(7));

  const auto trefoil = full_report({3, 1});
  CHECK(trefoil.surfaces.size() == 2);
  CHECK(trefoil.slopes() == std::vector<int>{0, 6});
  CHECK(trefoil.alexander.canonical == poly({1, -1, 1}));
}

TEST_CASE("oracle: recurrence matches interpolation of the pencil determinant") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 120; ++trial) {
    const Expansion e{oracle::random_terms(rng, 16, 11)};
    CHECK(state_determinant(e) == oracle::interpolated_pencil_determinant(standard_state_matrix(e)));
  }
}

TEST_CASE("oracle: inertia and minors match Descartes' rule") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    const Expansion e{oracle::random_terms(rng, 7, 6)};
    const GLMatrix gl = gl_matrix(standard_state_matrix(e));
    const int reference = oracle::descartes_signature(gl);
    CHECK(state_signature_minors(gl) == reference);
    CHECK(symmetric_inertia(gl).signature() == reference);
    CHECK(state_signature(e) == reference);
    const GLMatrix moved = gl_matrix(apply_moves(e, random_moves(gl.rows(), rng)));
    CHECK(symmetric_inertia(moved).signature() == oracle::descartes_signature(moved));
  }
  // A matrix with a zero diagonal exercises the 2x2 pivot branch.
  GLMatrix hyperbolic(3, 3);
  hyperbolic << 0, 1, 0, 1, 0, 0, 0, 0, 0;
  const auto inertia = symmetric_inertia(hyperbolic);
  CHECK(inertia.positive == 1);
  CHECK(inertia.negative == 1);
  CHECK(inertia.zero == 1);
}

TEST_CASE("StatePolynomial scaled serialization") {
  const auto p = state_polynomial({{2, 3}});
  const auto scaled = p.scaled_coefficients();
  CHECK(scaled == std::vector<Integer>{6, -16, 6});
  CHECK(StatePolynomial::from_scaled(2, 0, scaled) == p);
  CHECK_THROWS_AS(StatePolynomial::from_scaled(2, 0, {0, 0}), InvalidInput);
  CHECK_THROWS_AS((StatePolynomial{poly({frac(1, 3)}), 2}.scaled_coefficients()), ConsistencyError);
}

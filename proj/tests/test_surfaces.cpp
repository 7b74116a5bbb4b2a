#include "bridgestate/errors.hpp"
#include "bridgestate/invariants.hpp"
#include "bridgestate/surfaces.hpp"
#include "doctest.h"

using namespace bridgestate;
using Terms = std::vector<std::int64_t>;

namespace {

std::vector<Terms> terms_of(const std::vector<Expansion>& es) {
  std::vector<Terms> out;
  for (const auto& e : es) out.push_back(e.terms);
  return out;
}

}  // namespace

TEST_CASE("make_knot validation") {
  CHECK(make_knot(7, 3) == TwoBridgeKnot{7, 3});
  CHECK(make_knot(7, 10) == TwoBridgeKnot{7, 3});
  CHECK(make_knot(7, -4) == TwoBridgeKnot{7, 3});
  CHECK_THROWS_WITH_AS(make_knot(4, 1), "alpha must be odd, got 4", InvalidInput);
  CHECK_THROWS_AS(make_knot(1, 1), InvalidInput);
  CHECK_THROWS_AS(make_knot(-5, 2), InvalidInput);
  CHECK_THROWS_AS(make_knot(9, 3), InvalidInput);
  CHECK_THROWS_AS(make_knot(9, 9), InvalidInput);
  CHECK_THROWS_AS(make_knot(9, 0), InvalidInput);
}

TEST_CASE("knots_up_to lists coprime pairs in order") {
  const auto ks = knots_up_to(7);
  const std::vector<TwoBridgeKnot> expected{{3, 1}, {3, 2}, {5, 1}, {5, 2}, {5, 3}, {5, 4},
                                            {7, 1}, {7, 2}, {7, 3}, {7, 4}, {7, 5}, {7, 6}};
  CHECK(ks == expected);
}

TEST_CASE("sign_counts") {
  CHECK(sign_counts({{3, -2, 2}}) == SignCounts{3, 0});
  CHECK(sign_counts({{-2, 4}}) == SignCounts{0, 2});
  for (std::int64_t m = 1; m <= 6; ++m) CHECK(sign_counts({{2, 2 * m}}) == SignCounts{1, 1});
}

TEST_CASE("make_surface") {
  for (std::int64_t m : {3, 5, -7}) {
    const auto s = make_surface({{m}});
    CHECK(s.genus_twice == 1);
    CHECK_FALSE(s.orientable);
  }
  const auto a = make_surface({{-2, 4}});
  CHECK(a.genus_twice == 2);
  CHECK(a.orientable);
  const auto b = make_surface({{3, -2, 2}});
  CHECK(b.genus_twice == 3);
  CHECK_FALSE(b.orientable);
  CHECK_THROWS_AS(make_surface({{1, 2}}), InvalidInput);
}

TEST_CASE("surfaces_expansions examples") {
  CHECK(terms_of(surfaces_expansions({5, 2})) == std::vector<Terms>{{2, 2}, {3, -2}, {-2, 3}});
  CHECK(terms_of(surfaces_expansions({7, 3})) == std::vector<Terms>{{2, 3}, {3, -2, 2}, {-2, 4}});
  CHECK(terms_of(surfaces_expansions({3, 1})) == std::vector<Terms>{{3}, {-2, 2}});
  const auto tagged = surfaces_expansions({5, 2});
  CHECK(tagged[0].integer_part == 0);
  CHECK(tagged[1].integer_part == 0);
  CHECK(tagged[2].integer_part == 1);
  CHECK_THROWS_AS(surfaces_expansions({4, 1}), InvalidInput);
}

TEST_CASE("find_seifert examples and errors") {
  CHECK(find_seifert(essential_surfaces({5, 2})).expansion.terms == Terms{2, 2});
  CHECK(find_seifert(essential_surfaces({3, 1})).expansion.terms == Terms{-2, 2});
  CHECK(find_seifert(essential_surfaces({7, 3})).expansion.terms == Terms{-2, 4});
  CHECK_THROWS_AS(find_seifert({make_surface({{3}})}), ConsistencyError);
  CHECK_THROWS_AS(find_seifert({make_surface({{2, 2}}), make_surface({{-2, 2}})}), ConsistencyError);
  CHECK_THROWS_AS(find_seifert({}), ConsistencyError);
}

TEST_CASE("property: tagged subsets are disjoint and the Seifert surface is unique (alpha <= 199)") {
  for (const auto& k : knots_up_to(199)) {
    const auto es = surfaces_expansions(k);
    for (const auto& e : es) {
      CHECK(cf_value(e).sign() == (e.integer_part == 0 ? 1 : -1));
      CHECK(std::count_if(es.begin(), es.end(), [&](const Expansion& o) { return o.terms == e.terms; }) == 1);
    }
    const auto surfaces = essential_surfaces(k);
    const auto& seifert = find_seifert(surfaces);
    for (const auto& s : surfaces) {
      CHECK(s.signs.plus + s.signs.minus == s.genus_twice);
      if (s.orientable) CHECK(s.genus_twice % 2 == 0);
    }
    CHECK(seifert.genus_twice == alexander_polynomial(k).canonical.span());
  }
}

TEST_CASE("orientable implies an integral state polynomial, but not conversely") {
  for (const auto& k : knots_up_to(61))
    for (const auto& s : essential_surfaces(k)) {
      if (!s.orientable) continue;
      const auto p = state_polynomial(s.expansion);
      for (const auto& c : p.canonical.coefficients()) CHECK(c.is_integer());
    }
  // [4,-3] is a nonorientable surface of K(11,3) with an integral polynomial.
  const Expansion e{{4, -3}};
  CHECK(cf_value(e) == frac(11, 3));
  CHECK_FALSE(make_surface(e).orientable);
  CHECK(state_polynomial(e).canonical == LaurentPolynomial(0, {3, -5, 3}));
}

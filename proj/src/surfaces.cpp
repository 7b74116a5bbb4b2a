#include "bridgestate/surfaces.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bridgestate/errors.hpp"

namespace bridgestate {

TwoBridgeKnot make_knot(std::int64_t alpha, std::int64_t beta) {
  if (alpha < 3) throw InvalidInput("alpha must be at least 3, got " + std::to_string(alpha));
  if (alpha % 2 == 0) throw InvalidInput("alpha must be odd, got " + std::to_string(alpha));
  const std::int64_t b = ((beta % alpha) + alpha) % alpha;
  if (b == 0) throw InvalidInput("beta must not be divisible by alpha");
  if (std::gcd(alpha, b) != 1)
    throw InvalidInput("alpha and beta must be coprime, got (" + std::to_string(alpha) + ", " + std::to_string(beta) + ")");
  return {alpha, b};
}

TwoBridgeKnot mirror(const TwoBridgeKnot& k) { return {k.alpha, k.alpha - k.beta}; }

std::vector<TwoBridgeKnot> knots_up_to(std::int64_t max_alpha) {
  std::vector<TwoBridgeKnot> out;
  for (std::int64_t a = 3; a <= max_alpha; a += 2)
    for (std::int64_t b = 1; b < a; ++b)
      if (std::gcd(a, b) == 1) out.push_back({a, b});
  return out;
}

SignCounts sign_counts(const Expansion& e) {
  SignCounts s;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const bool expect_positive = i % 2 == 0;
    if ((e.terms[i] > 0) == expect_positive)
      ++s.plus;
    else
      ++s.minus;
  }
  return s;
}

EssentialSurface make_surface(const Expansion& e) {
  require_valid(e);
  return {e, e.all_even(), static_cast<int>(e.size()), sign_counts(e)};
}

std::vector<Expansion> surfaces_expansions(const TwoBridgeKnot& knot) {
  const TwoBridgeKnot k = make_knot(knot.alpha, knot.beta);
  std::vector<Expansion> out = enumerate_expansions(frac(k.alpha, k.beta));
  std::vector<Expansion> second = enumerate_expansions(frac(k.alpha, k.beta - k.alpha));
  for (auto& e : second) e.integer_part = 1;
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

std::vector<EssentialSurface> essential_surfaces(const TwoBridgeKnot& knot) {
  std::vector<EssentialSurface> out;
  for (const auto& e : surfaces_expansions(knot)) out.push_back(make_surface(e));
  return out;
}

const EssentialSurface& find_seifert(const std::vector<EssentialSurface>& surfaces) {
  const EssentialSurface* found = nullptr;
  for (const auto& s : surfaces) {
    if (!s.orientable) continue;
    if (found) throw ConsistencyError("unique all-even expansion", "two candidates " + to_string(found->expansion) + " and " + to_string(s.expansion));
    found = &s;
  }
  if (!found) throw ConsistencyError("unique all-even expansion", "no all-even expansion among " + std::to_string(surfaces.size()) + " surfaces");
  return *found;
}

}  // namespace bridgestate

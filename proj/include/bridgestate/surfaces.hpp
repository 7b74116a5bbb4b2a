#pragma once

#include <cstdint>
#include <vector>

#include "bridgestate/continued_fraction.hpp"

namespace bridgestate {

/// 2-bridge knot K(alpha, beta): alpha odd >= 3, 0 < beta < alpha, coprime.
/// alpha is the determinant of the knot.
struct TwoBridgeKnot {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend auto operator<=>(const TwoBridgeKnot&, const TwoBridgeKnot&) = default;
};

/// Validates and reduces beta mod alpha into (0, alpha). Throws InvalidInput
/// naming the rule that failed.
TwoBridgeKnot make_knot(std::int64_t alpha, std::int64_t beta);

/// K(alpha, alpha - beta).
TwoBridgeKnot mirror(const TwoBridgeKnot& k);

/// Every valid knot with alpha <= max_alpha, sorted by (alpha, beta).
std::vector<TwoBridgeKnot> knots_up_to(std::int64_t max_alpha);

struct SignCounts {
  int plus = 0;   // terms whose sign follows +, -, +, -, ...
  int minus = 0;  // terms that break the pattern
  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

SignCounts sign_counts(const Expansion& e);

/// An essential spanning surface, described by its plumbing expansion.
struct EssentialSurface {
  Expansion expansion;
  bool orientable = false;
  int genus_twice = 0;  // = k
  SignCounts signs;
};

EssentialSurface make_surface(const Expansion& e);

/// Expansions of alpha/beta (tagged 0) followed by those of alpha/(beta-alpha)
/// (tagged 1), each block sorted.
std::vector<Expansion> surfaces_expansions(const TwoBridgeKnot& knot);

std::vector<EssentialSurface> essential_surfaces(const TwoBridgeKnot& knot);

/// The unique orientable member. Throws ConsistencyError if there is not
/// exactly one.
const EssentialSurface& find_seifert(const std::vector<EssentialSurface>& surfaces);

}  // namespace bridgestate

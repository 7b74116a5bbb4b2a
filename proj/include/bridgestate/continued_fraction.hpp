#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bridgestate/fraction.hpp"

namespace bridgestate {

/// Continued fraction [n1, ..., nk] = n1 + 1/(n2 + ... + 1/nk) with every
/// |ni| >= 2. `integer_part` records which of the two targets of a knot the
/// expansion came from (0 for alpha/beta, 1 for alpha/(beta - alpha)).
struct Expansion {
  std::vector<std::int64_t> terms;
  int integer_part = 0;

  std::size_t size() const { return terms.size(); }
  bool all_even() const;

  friend bool operator==(const Expansion&, const Expansion&) = default;
  /// Lexicographic on the terms, then by integer part.
  friend std::strong_ordering operator<=>(const Expansion& a, const Expansion& b);
};

/// k >= 1 and every |ni| >= 2.
bool is_valid_expansion(const std::vector<std::int64_t>& terms);

/// Throws InvalidInput unless is_valid_expansion.
void require_valid(const Expansion& e);

/// n1 + 1/(n2 + ... + 1/nk); always of absolute value > 1.
Fraction cf_value(const Expansion& e);

/// All expansions with value x, sorted lexicographically. Requires |x| > 1.
std::vector<Expansion> enumerate_expansions(const Fraction& x);

/// "[2,-2,3]"
std::string to_string(const Expansion& e);

}  // namespace bridgestate

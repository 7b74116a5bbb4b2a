#include "bridgestate/continued_fraction.hpp"

#include <algorithm>

#include "bridgestate/errors.hpp"

namespace bridgestate {

bool Expansion::all_even() const {
  return std::all_of(terms.begin(), terms.end(), [](std::int64_t n) { return n % 2 == 0; });
}

std::strong_ordering operator<=>(const Expansion& a, const Expansion& b) {
  if (auto c = a.terms <=> b.terms; c != 0) return c;
  return a.integer_part <=> b.integer_part;
}

bool is_valid_expansion(const std::vector<std::int64_t>& terms) {
  return !terms.empty() && std::all_of(terms.begin(), terms.end(), [](std::int64_t n) { return n <= -2 || n >= 2; });
}

void require_valid(const Expansion& e) {
  if (!is_valid_expansion(e.terms)) throw InvalidInput("expansion must be nonempty with every |n_i| >= 2: " + to_string(e));
}

Fraction cf_value(const Expansion& e) {
  require_valid(e);
  Fraction value(e.terms.back());
  for (auto it = e.terms.rbegin() + 1; it != e.terms.rend(); ++it) {
    if (value.is_zero()) throw ConsistencyError("continued fraction", "zero tail in " + to_string(e));
    value = Fraction(*it) + value.reciprocal();
  }
  if (value.abs() <= Fraction(1)) throw ConsistencyError("continued fraction", "|value| <= 1 for " + to_string(e));
  return value;
}

namespace {

void expand(const Fraction& x, std::vector<std::int64_t>& prefix, std::vector<Expansion>& out) {
  if (x.is_integer()) {
    // |x| >= 2 holds here: every target reached has |x| > 1.
    prefix.push_back(x.numerator().get_si());
    out.push_back({prefix, 0});
    prefix.pop_back();
    return;
  }
  for (const Integer& n : {x.floor(), x.ceil()}) {
    if (abs(n) < 2) continue;
    prefix.push_back(n.get_si());
    expand((x - Fraction(n)).reciprocal(), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Expansion> enumerate_expansions(const Fraction& x) {
  if (x.abs() <= Fraction(1)) throw InvalidInput("continued fraction target must satisfy |x| > 1, got " + x.to_string());
  if (!x.numerator().fits_slong_p()) throw InvalidInput("continued fraction target too large: " + x.to_string());
  std::vector<Expansion> out;
  std::vector<std::int64_t> prefix;
  expand(x, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Expansion& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e.terms[i]);
  }
  return s + "]";
}

}  // namespace bridgestate

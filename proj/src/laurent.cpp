#include "bridgestate/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "bridgestate/errors.hpp"

namespace bridgestate {

LaurentPolynomial::LaurentPolynomial(const Fraction& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

LaurentPolynomial::LaurentPolynomial(int min_degree, std::vector<Fraction> coefficients)
    : min_degree_(min_degree), coeffs_(std::move(coefficients)) {
  normalize();
}

LaurentPolynomial LaurentPolynomial::monomial(const Fraction& c, int degree) {
  return LaurentPolynomial(degree, {c});
}

void LaurentPolynomial::normalize() {
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Fraction& c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_degree_ = 0;
    return;
  }
  min_degree_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back().is_zero()) coeffs_.pop_back();
}

Fraction LaurentPolynomial::coefficient(int degree) const {
  const int idx = degree - min_degree_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return Fraction(0);
  return coeffs_[static_cast<std::size_t>(idx)];
}

void LaurentPolynomial::accumulate(const LaurentPolynomial& b, bool subtract) {
  if (b.is_zero()) return;
  if (coeffs_.empty()) {
    min_degree_ = b.min_degree_;
    coeffs_ = b.coeffs_;
    if (subtract)
      for (auto& c : coeffs_) c = -c;
    return;
  }
  const int lo = std::min(min_degree_, b.min_degree_);
  const int hi = std::max(max_degree(), b.max_degree());
  if (lo < min_degree_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_degree_ - lo), Fraction(0));
  min_degree_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto offset = static_cast<std::size_t>(b.min_degree_ - lo);
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    if (subtract)
      coeffs_[offset + i] -= b.coeffs_[i];
    else
      coeffs_[offset + i] += b.coeffs_[i];
  }
  normalize();
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  accumulate(o, false);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  accumulate(o, true);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Fraction> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPolynomial(a.min_degree_ + b.min_degree_, std::move(out));
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int shift) const {
  if (is_zero()) return *this;
  LaurentPolynomial r = *this;
  r.min_degree_ += shift;
  return r;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Fraction& c = coeffs_[i];
    if (c.is_zero()) continue;
    const int deg = min_degree_ + static_cast<int>(i);
    const Fraction mag = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (deg == 0) {
      os << mag;
      continue;
    }
    if (mag != Fraction(1)) os << mag;
    os << 't';
    if (deg != 1) os << '^' << deg;
  }
  return os.str();
}

Fraction laurent_eval(const LaurentPolynomial& p, const Fraction& x) {
  if (p.is_zero()) return Fraction(0);
  if (x.is_zero()) {
    if (p.min_degree() < 0) throw InvalidInput("evaluation at 0 of a polynomial with negative exponents");
    return p.coefficient(0);
  }
  // Horner over the stored span, then scale by x^min_degree.
  const auto cs = p.coefficients();
  Fraction acc(0);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * x + *it;
  const Fraction base = p.min_degree() < 0 ? x.reciprocal() : x;
  const int n = p.min_degree() < 0 ? -p.min_degree() : p.min_degree();
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

LaurentPolynomial laurent_reciprocal_substitute(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  const auto cs = p.coefficients();
  std::vector<Fraction> reversed(cs.rbegin(), cs.rend());
  return LaurentPolynomial(-p.max_degree(), std::move(reversed));
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

}  // namespace bridgestate

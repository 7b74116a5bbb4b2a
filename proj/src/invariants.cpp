#include "bridgestate/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "bridgestate/errors.hpp"

namespace bridgestate {

LaurentPolynomial canonical_form(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  LaurentPolynomial q = p.shifted(-p.min_degree());
  return q.lowest().sign() < 0 ? -q : q;
}

bool poly_equivalent(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return canonical_form(p) == canonical_form(q);
}

std::vector<Integer> StatePolynomial::scaled_coefficients() const {
  std::vector<Integer> out;
  out.reserve(canonical.coefficients().size());
  for (const Fraction& c : canonical.coefficients()) {
    const Integer den = c.denominator();
    const auto exponent = mpz_scan1(den.get_mpz_t(), 0);
    if (mpz_popcount(den.get_mpz_t()) != 1 || exponent > static_cast<unsigned long>(k))
      throw ConsistencyError("integrality of 2^k Delta_S", "coefficient " + c.to_string() + " with k = " + std::to_string(k));
    Integer scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), c.numerator().get_mpz_t(), static_cast<unsigned long>(k) - exponent);
    out.push_back(std::move(scaled));
  }
  return out;
}

StatePolynomial StatePolynomial::from_scaled(int k, int min_degree, const std::vector<Integer>& scaled) {
  if (k < 0) throw InvalidInput("negative k");
  std::vector<Fraction> cs;
  cs.reserve(scaled.size());
  for (const Integer& c : scaled) cs.push_back(Fraction::dyadic(c, static_cast<unsigned long>(k)));
  LaurentPolynomial p(min_degree, std::move(cs));
  if (p.is_zero()) throw InvalidInput("state polynomial cannot be zero");
  return {p, k};
}

namespace {

// 2^k det(V - tV^T) for the standard matrix, as integer coefficients of
// t^0..t^k. With D_j = 2^j d_j the recurrence
//   d_j = s_j (n_j/2)(1 - t) d_{j-1} + t d_{j-2}
// becomes D_j = s_j n_j (1 - t) D_{j-1} + 4t D_{j-2}.
std::vector<Integer> scaled_determinant(const Expansion& e) {
  require_valid(e);
  const std::size_t k = e.size();
  std::vector<Integer> prev(k + 1), cur(k + 1), next(k + 1);  // D_{j-2}, D_{j-1}, D_j
  cur[0] = 1;
  Integer tmp;
  for (std::size_t j = 0; j < k; ++j) {
    const long a = j % 2 == 0 ? e.terms[j] : -e.terms[j];
    // cur has degree j, prev degree j-1 (absent for j == 0).
    mpz_mul_si(next[0].get_mpz_t(), cur[0].get_mpz_t(), a);
    for (std::size_t i = 1; i <= j; ++i) {
      mpz_sub(tmp.get_mpz_t(), cur[i].get_mpz_t(), cur[i - 1].get_mpz_t());
      mpz_mul_si(next[i].get_mpz_t(), tmp.get_mpz_t(), a);
      if (j > 0) mpz_addmul_ui(next[i].get_mpz_t(), prev[i - 1].get_mpz_t(), 4);
    }
    mpz_mul_si(next[j + 1].get_mpz_t(), cur[j].get_mpz_t(), -a);
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return cur;
}

LaurentPolynomial unscale(const std::vector<Integer>& scaled, std::size_t k) {
  std::vector<Fraction> cs;
  cs.reserve(scaled.size());
  for (const Integer& c : scaled) cs.push_back(Fraction::dyadic(c, k));
  return LaurentPolynomial(0, std::move(cs));
}

}  // namespace

LaurentPolynomial state_determinant(const Expansion& e) { return unscale(scaled_determinant(e), e.size()); }

StatePolynomial state_polynomial(const Expansion& e) {
  return {canonical_form(state_determinant(e)), static_cast<int>(e.size())};
}

int oracle_max_k_from_env() {
  const char* raw = std::getenv("BRIDGESTATE_ORACLE_MAX_K");
  if (!raw || !*raw) return kDefaultOracleMaxK;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 12) throw InvalidInput(std::string("BRIDGESTATE_ORACLE_MAX_K must be an integer in [1, 12], got ") + raw);
  return static_cast<int>(v);
}

LaurentPolynomial state_polynomial_oracle(const StateMatrix& v, int max_k) {
  if (v.rows() != v.cols()) throw InvalidInput("state matrix must be square");
  if (v.rows() > max_k)
    throw InvalidInput("cofactor oracle refuses size " + std::to_string(v.rows()) + " above bound " + std::to_string(max_k));
  return cofactor_determinant(seifert_form_pencil(v));
}

int state_signature(const Expansion& e) {
  const SignCounts s = sign_counts(e);
  return s.plus - s.minus;
}

int tridiagonal_signature(const std::vector<Integer>& diagonal, const std::vector<Integer>& coupling) {
  if (coupling.size() + 1 != diagonal.size() && !(diagonal.empty() && coupling.empty()))
    throw InvalidInput("tridiagonal bands of inconsistent length");
  // D_j = g_jj D_{j-1} - c_{j-1} D_{j-2}; each nonzero minor ratio D_j / D_{j-1}
  // is a pivot, so sign agreements count positive and changes count negative
  // eigenvalues.
  Integer before(0);  // D_{j-2}
  Integer last(1);    // D_{j-1}
  int signature = 0;
  for (std::size_t j = 0; j < diagonal.size(); ++j) {
    Integer next = diagonal[j] * last;
    if (j > 0) next -= coupling[j - 1] * before;
    if (next == 0) throw ConsistencyError("nonvanishing leading minors", "minor " + std::to_string(j + 1) + " is zero");
    signature += sgn(next) == sgn(last) ? 1 : -1;
    before = std::move(last);
    last = std::move(next);
  }
  return signature;
}

int state_signature_minors(const GLMatrix& gl) {
  if (!is_symmetric(gl) || !is_tridiagonal(gl)) throw InvalidInput("minor signature needs a symmetric tridiagonal matrix");
  std::vector<Integer> diag;
  std::vector<Integer> coupling;
  for (Eigen::Index i = 0; i < gl.rows(); ++i) {
    if (!gl(i, i).is_integer()) throw InvalidInput("Gordon-Litherland matrix must be integral");
    diag.push_back(gl(i, i).numerator());
    if (i + 1 < gl.rows()) {
      const Fraction c = gl(i, i + 1) * gl(i + 1, i);
      if (!c.is_integer()) throw InvalidInput("Gordon-Litherland matrix must be integral");
      coupling.push_back(c.numerator());
    }
  }
  return tridiagonal_signature(diag, coupling);
}

int knot_signature(const TwoBridgeKnot& knot) {
  return state_signature(find_seifert(essential_surfaces(knot)).expansion);
}

namespace {

bool belongs_to(const Expansion& e, const TwoBridgeKnot& k) {
  const Fraction v = cf_value(e);
  return v == frac(k.alpha, k.beta) || v == frac(k.alpha, k.beta - k.alpha);
}

}  // namespace

int boundary_slope(const Expansion& e, const TwoBridgeKnot& knot) {
  const TwoBridgeKnot k = make_knot(knot.alpha, knot.beta);
  require_valid(e);
  if (!belongs_to(e, k))
    throw InvalidInput(to_string(e) + " is not an expansion of K(" + std::to_string(k.alpha) + "," + std::to_string(k.beta) + ")");
  return 2 * (state_signature(e) - knot_signature(k));
}

int boundary_slope_ht(const Expansion& e, const Expansion& seifert) {
  require_valid(e);
  require_valid(seifert);
  if (!seifert.all_even()) throw InvalidInput("Seifert expansion must be all even, got " + to_string(seifert));
  const SignCounts s = sign_counts(e);
  const SignCounts s0 = sign_counts(seifert);
  return 2 * (s.plus - s.minus) - 2 * (s0.plus - s0.minus);
}

StatePolynomial alexander_polynomial(const TwoBridgeKnot& knot) {
  return state_polynomial(find_seifert(essential_surfaces(knot)).expansion);
}

int knot_genus_twice(const TwoBridgeKnot& knot) { return find_seifert(essential_surfaces(knot)).genus_twice; }

namespace {

int crosscap_twice(const std::vector<EssentialSurface>& surfaces, int seifert_genus_twice) {
  int best = seifert_genus_twice + 1;
  for (const auto& s : surfaces)
    if (!s.orientable) best = std::min(best, s.genus_twice);
  return best;
}

}  // namespace

int nonorientable_genus_twice(const TwoBridgeKnot& knot) {
  const auto surfaces = essential_surfaces(knot);
  return crosscap_twice(surfaces, find_seifert(surfaces).genus_twice);
}

std::vector<int> InvariantReport::slopes() const {
  std::vector<int> out;
  out.reserve(surfaces.size());
  for (const auto& s : surfaces) out.push_back(s.boundary_slope);
  std::sort(out.begin(), out.end());
  return out;
}

InvariantReport full_report(const TwoBridgeKnot& knot) {
  const TwoBridgeKnot k = make_knot(knot.alpha, knot.beta);
  const auto surfaces = essential_surfaces(k);
  const EssentialSurface& seifert = find_seifert(surfaces);
  const int sigma_k = state_signature(seifert.expansion);
  const Integer scaled_det(k.alpha);

  InvariantReport report;
  report.knot = k;
  report.determinant = k.alpha;
  report.knot_signature = sigma_k;
  report.genus_twice = seifert.genus_twice;
  report.nonorientable_genus_twice = crosscap_twice(surfaces, seifert.genus_twice);

  const auto name = [&](const Expansion& e) {
    return "K(" + std::to_string(k.alpha) + "," + std::to_string(k.beta) + ") surface " + to_string(e);
  };

  for (const auto& s : surfaces) {
    // Determinant check on 2^k det(V - tV^T) directly: sum (-1)^i D_i = +-2^k alpha.
    std::vector<Integer> scaled = scaled_determinant(s.expansion);
    Integer at_minus_one(0);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      if (i % 2 == 0)
        at_minus_one += scaled[i];
      else
        at_minus_one -= scaled[i];
    }
    if (abs(at_minus_one) != scaled_det << s.genus_twice)
      throw ConsistencyError("|Delta_S(-1)| = det(K)", name(s.expansion) + " gives " +
                                                           Fraction::dyadic(at_minus_one, s.expansion.size()).to_string());
    if (scaled.front() < 0)
      for (auto& c : scaled) c = -c;

    SurfaceRecord r;
    r.expansion = s.expansion;
    r.orientable = s.orientable;
    r.genus_twice = s.genus_twice;
    r.signs = s.signs;
    r.state_polynomial = {unscale(scaled, s.expansion.size()), s.genus_twice};
    r.state_signature = s.signs.plus - s.signs.minus;
    r.boundary_slope = 2 * (r.state_signature - sigma_k);

    std::vector<Integer> diag;
    diag.reserve(s.expansion.size());
    for (std::size_t i = 0; i < s.expansion.size(); ++i)
      diag.emplace_back(i % 2 == 0 ? s.expansion.terms[i] : -s.expansion.terms[i]);
    const std::vector<Integer> coupling(s.expansion.size() - 1, Integer(1));
    if (const int minors = tridiagonal_signature(diag, coupling); minors != r.state_signature)
      throw ConsistencyError("sigma_S = N+ - N-", name(s.expansion) + ": minors give " + std::to_string(minors) + ", sign counts " +
                                                      std::to_string(r.state_signature));
    if (const int ht = boundary_slope_ht(s.expansion, seifert.expansion); ht != r.boundary_slope)
      throw ConsistencyError("slope = 2(sigma_S - sigma(K))", name(s.expansion) + ": " + std::to_string(r.boundary_slope) +
                                                                  " vs sign-count formula " + std::to_string(ht));
    if (s.orientable) report.alexander = r.state_polynomial;
    report.surfaces.push_back(std::move(r));
  }
  return report;
}

}  // namespace bridgestate

#include "bridgestate/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bridgestate/errors.hpp"
#include "bridgestate/parallel.hpp"

namespace bridgestate {

StateMatrix apply_moves(const Expansion& e, const std::vector<MatrixMove>& moves) {
  StateMatrix v = standard_state_matrix(e);
  const Eigen::Index k = v.rows();
  std::vector<Eigen::Index> row_of(static_cast<std::size_t>(k));
  std::iota(row_of.begin(), row_of.end(), Eigen::Index{0});
  for (const MatrixMove& m : moves) {
    switch (m.kind) {
      case MatrixMove::Kind::FlipNormal: {
        if (m.band < 0 || m.band + 1 >= k) throw InvalidInput("flip_normal band out of range");
        const Eigen::Index a = row_of[static_cast<std::size_t>(m.band)];
        const Eigen::Index b = row_of[static_cast<std::size_t>(m.band + 1)];
        std::swap(v(a, b), v(b, a));
        break;
      }
      case MatrixMove::Kind::FlipOrientation:
        if (m.band < 0 || m.band >= k) throw InvalidInput("flip_orientation band out of range");
        v = flip_orientation(v, row_of[static_cast<std::size_t>(m.band)]);
        break;
      case MatrixMove::Kind::Relabel: {
        if (static_cast<Eigen::Index>(m.new_rows.size()) != k) throw InvalidInput("relabeling of the wrong size");
        Eigen::PermutationMatrix<Eigen::Dynamic> p(k);
        for (Eigen::Index r = 0; r < k; ++r) p.indices()(r) = static_cast<int>(m.new_rows[static_cast<std::size_t>(r)]);
        v = StateMatrix(p * v * p.transpose());
        for (auto& r : row_of) r = m.new_rows[static_cast<std::size_t>(r)];
        break;
      }
    }
  }
  return v;
}

std::vector<MatrixMove> random_moves(Eigen::Index k, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(1, std::max(1, max_len));
  std::uniform_int_distribution<int> kind_dist(k >= 2 ? 0 : 1, 2);
  std::vector<MatrixMove> out;
  const int len = len_dist(rng);
  for (int s = 0; s < len; ++s) {
    MatrixMove m{static_cast<MatrixMove::Kind>(kind_dist(rng)), 0, {}};
    if (m.kind == MatrixMove::Kind::FlipNormal) {
      m.band = std::uniform_int_distribution<Eigen::Index>(0, k - 2)(rng);
    } else if (m.kind == MatrixMove::Kind::FlipOrientation) {
      m.band = std::uniform_int_distribution<Eigen::Index>(0, k - 1)(rng);
    } else {
      m.new_rows.resize(static_cast<std::size_t>(k));
      std::iota(m.new_rows.begin(), m.new_rows.end(), Eigen::Index{0});
      std::shuffle(m.new_rows.begin(), m.new_rows.end(), rng);
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

bool poly_less(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.min_degree() != b.min_degree()) return a.min_degree() < b.min_degree();
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

bool triple_less(const InvariantTriple& a, const InvariantTriple& b) {
  if (a.polynomial != b.polynomial) return poly_less(a.polynomial, b.polynomial);
  if (a.signature != b.signature) return a.signature < b.signature;
  return a.slope < b.slope;
}

std::string knot_name(const TwoBridgeKnot& k) {
  return "K(" + std::to_string(k.alpha) + "," + std::to_string(k.beta) + ")";
}

std::int64_t inverse_mod(std::int64_t b, std::int64_t a) {
  for (std::int64_t x = 1; x < a; ++x)
    if ((b * x) % a == 1) return x;
  throw InvalidInput("no inverse");
}

}  // namespace

std::vector<InvariantTriple> invariant_multiset(const InvariantReport& report) {
  std::vector<InvariantTriple> out;
  for (const auto& s : report.surfaces) out.push_back({s.state_polynomial.canonical, s.state_signature, s.boundary_slope});
  std::sort(out.begin(), out.end(), triple_less);
  return out;
}

VerifySummary verify_knot(const TwoBridgeKnot& input, const VerifyOptions& options) {
  VerifySummary summary;
  summary.knots = 1;
  const TwoBridgeKnot knot = make_knot(input.alpha, input.beta);
  const std::string kname = knot_name(knot);
  const auto fail = [&](std::string property, std::string witness) {
    summary.failure = PropertyFailure{std::move(property), std::move(witness)};
    return summary;
  };

  InvariantReport report;
  try {
    report = full_report(knot);
  } catch (const ConsistencyError& e) {
    return fail(e.property(), e.what());
  }
  summary.surfaces = report.surfaces.size();

  const Fraction det(knot.alpha);
  const Fraction target[2] = {frac(knot.alpha, knot.beta), frac(knot.alpha, knot.beta - knot.alpha)};
  std::mt19937_64 rng(options.seed ^ (static_cast<std::uint64_t>(knot.alpha) << 32) ^ static_cast<std::uint64_t>(knot.beta));
  int seifert_count = 0;

  for (const SurfaceRecord& s : report.surfaces) {
    const Expansion& e = s.expansion;
    const std::string where = kname + " " + to_string(e);
    const int k = static_cast<int>(e.size());

    if (!is_valid_expansion(e.terms)) return fail("|n_i| >= 2", where);
    if (cf_value(e) != target[e.integer_part]) return fail("expansion value", where + " evaluates to " + cf_value(e).to_string());

    const LaurentPolynomial raw = state_determinant(e);
    const LaurentPolynomial& delta = s.state_polynomial.canonical;
    if (canonical_form(laurent_reciprocal_substitute(raw)) != delta)
      return fail("state polynomial symmetry", where + ": " + delta.to_string());
    if (laurent_eval(raw, Fraction(1)) != Fraction(k % 2 == 0 ? 1 : 0))
      return fail("state polynomial at t = 1", where + " gives " + laurent_eval(raw, Fraction(1)).to_string());
    if (laurent_eval(delta, Fraction(-1)).abs() != det)
      return fail("|Delta_S(-1)| = det(K)", where + " gives " + laurent_eval(delta, Fraction(-1)).to_string());
    Integer product(1);
    for (auto n : e.terms) product *= Integer(n);
    const Fraction expected_lead = Fraction(abs(product), Integer(1) << k);
    if (delta.min_degree() != 0 || delta.span() != k || delta.highest().abs() != expected_lead)
      return fail("state polynomial degree and leading coefficient",
                  where + ": " + delta.to_string() + ", expected degree " + std::to_string(k) + " and |lead| " + expected_lead.to_string());
    try {
      (void)s.state_polynomial.scaled_coefficients();
    } catch (const ConsistencyError& err) {
      return fail(err.property(), where);
    }
    if (s.orientable) {
      ++seifert_count;
      for (const Fraction& c : delta.coefficients())
        if (!c.is_integer()) return fail("integral Alexander polynomial", where + ": " + delta.to_string());
      if (s.boundary_slope != 0) return fail("Seifert slope is 0", where + " has slope " + std::to_string(s.boundary_slope));
    }
    if (std::abs(s.state_signature) > k) return fail("|sigma_S| <= 2g(S)", where);
    if (k <= 64) {
      const int minors = state_signature_minors(gl_matrix(standard_state_matrix(e)));
      if (minors != s.state_signature)
        return fail("sigma_S = N+ - N- (minors)", where + ": minors " + std::to_string(minors));
    }

    if (k <= options.oracle_max_k) {
      const StateMatrix v = standard_state_matrix(e);
      if (state_polynomial_oracle(v, options.oracle_max_k) != raw)
        return fail("recurrence = cofactor determinant", where);
      for (int rep = 0; rep < options.moves_per_surface; ++rep) {
        const StateMatrix w = apply_moves(e, random_moves(v.rows(), rng));
        if (!poly_equivalent(state_polynomial_oracle(w, options.oracle_max_k), delta))
          return fail("state polynomial invariance under moves", where);
        const GLMatrix gl = gl_matrix(w);
        if (symmetric_inertia(gl).signature() != s.state_signature) return fail("state signature invariance under moves", where);
        if (is_tridiagonal(gl) && state_signature_minors(gl) != s.state_signature)
          return fail("state signature invariance under moves (minors)", where);
      }
    }
  }
  if (seifert_count != 1) return fail("unique all-even expansion", kname);
  if (report.alexander.canonical.span() != report.genus_twice) return fail("deg Alexander = 2g(K)", kname);

  if (options.check_presentation) {
    const TwoBridgeKnot other = make_knot(knot.alpha, inverse_mod(knot.beta, knot.alpha));
    if (invariant_multiset(full_report(other)) != invariant_multiset(report))
      return fail("presentation independence", kname + " vs " + knot_name(other));
  }
  if (options.check_mirror) {
    const InvariantReport m = full_report(mirror(knot));
    auto expected = invariant_multiset(report);
    for (auto& t : expected) {
      t.signature = -t.signature;
      t.slope = -t.slope;
    }
    std::sort(expected.begin(), expected.end(), triple_less);
    if (invariant_multiset(m) != expected) return fail("mirror negates signatures and slopes", kname + " vs " + knot_name(mirror(knot)));
  }
  return summary;
}

VerifySummary verify_range(std::int64_t max_alpha, const VerifyOptions& options, unsigned jobs) {
  const auto knots = knots_up_to(max_alpha);
  std::vector<VerifySummary> results(knots.size());
  parallel_for(knots.size(), jobs, [&](std::size_t i) { results[i] = verify_knot(knots[i], options); });
  VerifySummary total;
  for (const auto& r : results) {
    total.knots += r.knots;
    total.surfaces += r.surfaces;
    if (r.failure && !total.failure) total.failure = r.failure;
  }
  return total;
}

}  // namespace bridgestate

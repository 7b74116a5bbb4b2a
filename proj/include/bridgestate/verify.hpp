#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bridgestate/invariants.hpp"

namespace bridgestate {

/// One step acting on a state matrix while tracking where each band's row
/// currently sits. Band indices are stable across relabelings.
struct MatrixMove {
  enum class Kind { FlipNormal, FlipOrientation, Relabel } kind;
  Eigen::Index band = 0;                // FlipNormal: pair (band, band+1); FlipOrientation: band
  std::vector<Eigen::Index> new_rows;   // Relabel: band at row r moves to row new_rows[r]
};

/// Applies moves to the standard state matrix of e.
StateMatrix apply_moves(const Expansion& e, const std::vector<MatrixMove>& moves);

/// Random sequence of 1..max_len moves for a k x k state matrix.
std::vector<MatrixMove> random_moves(Eigen::Index k, std::mt19937_64& rng, int max_len = 6);

struct VerifyOptions {
  int oracle_max_k = kDefaultOracleMaxK;
  /// Random move sequences checked per surface with k <= oracle_max_k.
  int moves_per_surface = 2;
  bool check_presentation = true;
  bool check_mirror = true;
  std::uint64_t seed = 0x5eed;
};

struct PropertyFailure {
  std::string property;
  std::string witness;
};

struct VerifySummary {
  std::size_t knots = 0;
  std::size_t surfaces = 0;
  std::optional<PropertyFailure> failure;
};

/// Runs every per-surface and per-knot property on one knot; stops at the
/// first failure.
VerifySummary verify_knot(const TwoBridgeKnot& knot, const VerifyOptions& options);

/// All knots with alpha <= max_alpha on `jobs` workers. The reported failure
/// is the one for the smallest (alpha, beta).
VerifySummary verify_range(std::int64_t max_alpha, const VerifyOptions& options, unsigned jobs);

/// Multiset of (canonical state polynomial, state signature, slope).
struct InvariantTriple {
  LaurentPolynomial polynomial;
  int signature = 0;
  int slope = 0;
  friend bool operator==(const InvariantTriple&, const InvariantTriple&) = default;
};
std::vector<InvariantTriple> invariant_multiset(const InvariantReport& report);

}  // namespace bridgestate

#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "bridgestate/invariants.hpp"

namespace bridgestate {

using Json = nlohmann::ordered_json;

// Polynomials are written as {"k", "min_degree", "coefficients"} where the
// coefficients are 2^k times the canonical ones, as decimal strings (they
// outgrow 64 bits quickly). Genera are written doubled: genus2, crosscap_genus2.

Json to_json(const StatePolynomial& p);
StatePolynomial polynomial_from_json(const Json& j);

Json to_json(const SurfaceRecord& s);
SurfaceRecord surface_from_json(const Json& j);

Json to_json(const InvariantReport& r);
/// Throws InvalidInput on malformed or internally inconsistent documents.
InvariantReport report_from_json(const Json& j);

std::string render_json(const InvariantReport& r);
InvariantReport parse_report_json(const std::string& text);

/// "1/2", "1", "3/2", ... from a doubled genus.
std::string genus_string(int genus_twice);

std::string render_table(const InvariantReport& r);
/// Listing of surfaces only (expansion, orientability, genus, N+/N-).
std::string render_surfaces_table(const InvariantReport& r);
Json surfaces_json(const InvariantReport& r);

/// Census CSV, one row per knot.
std::string census_csv_header();
std::string census_csv_row(const InvariantReport& r);
/// Companion CSV, one row per surface.
std::string surfaces_csv_header();
std::string surfaces_csv_rows(const InvariantReport& r);

enum class OutputFormat { Table, Json, Csv };

struct CensusResult {
  std::string main;      // CSV rows or a JSON document
  std::string surfaces;  // companion surface CSV (empty for JSON)
  std::size_t knots = 0;
  std::size_t surface_count = 0;
};

/// Reports for every knot with alpha <= max_alpha, computed on `jobs`
/// workers and written in (alpha, beta) order. Output bytes do not depend on
/// `jobs`. format must be Csv or Json.
CensusResult run_census(std::int64_t max_alpha, unsigned jobs, OutputFormat format);

}  // namespace bridgestate

#include "bridgestate/report_io.hpp"

#include <iomanip>
#include <sstream>

#include "bridgestate/errors.hpp"
#include "bridgestate/parallel.hpp"

namespace bridgestate {

namespace {

template <typename T>
std::string join(const std::vector<T>& xs, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("bad value for field \"") + key + "\"");
  }
}

}  // namespace

Json to_json(const StatePolynomial& p) {
  Json coeffs = Json::array();
  for (const Integer& c : p.scaled_coefficients()) coeffs.push_back(c.get_str());
  return Json{{"k", p.k}, {"min_degree", p.canonical.min_degree()}, {"coefficients", std::move(coeffs)}};
}

StatePolynomial polynomial_from_json(const Json& j) {
  const auto raw = field<std::vector<std::string>>(j, "coefficients");
  std::vector<Integer> scaled;
  scaled.reserve(raw.size());
  for (const auto& s : raw) {
    Integer c;
    if (s.empty() || c.set_str(s, 10) != 0) throw InvalidInput("bad polynomial coefficient \"" + s + "\"");
    scaled.push_back(c);
  }
  return StatePolynomial::from_scaled(field<int>(j, "k"), field<int>(j, "min_degree"), scaled);
}

Json to_json(const SurfaceRecord& s) {
  return Json{{"expansion", s.expansion.terms},
              {"integer_part", s.expansion.integer_part},
              {"orientable", s.orientable},
              {"genus2", s.genus_twice},
              {"n_plus", s.signs.plus},
              {"n_minus", s.signs.minus},
              {"state_signature", s.state_signature},
              {"slope", s.boundary_slope},
              {"state_polynomial", to_json(s.state_polynomial)}};
}

SurfaceRecord surface_from_json(const Json& j) {
  SurfaceRecord s;
  s.expansion.terms = field<std::vector<std::int64_t>>(j, "expansion");
  s.expansion.integer_part = field<int>(j, "integer_part");
  require_valid(s.expansion);
  s.orientable = field<bool>(j, "orientable");
  s.genus_twice = field<int>(j, "genus2");
  s.signs.plus = field<int>(j, "n_plus");
  s.signs.minus = field<int>(j, "n_minus");
  s.state_signature = field<int>(j, "state_signature");
  s.boundary_slope = field<int>(j, "slope");
  s.state_polynomial = polynomial_from_json(field<Json>(j, "state_polynomial"));
  if (s.signs.plus + s.signs.minus != s.genus_twice || s.genus_twice != static_cast<int>(s.expansion.size()))
    throw InvalidInput("surface record " + to_string(s.expansion) + " has inconsistent counts");
  return s;
}

Json to_json(const InvariantReport& r) {
  Json surfaces = Json::array();
  for (const auto& s : r.surfaces) surfaces.push_back(to_json(s));
  return Json{{"alpha", r.knot.alpha},
              {"beta", r.knot.beta},
              {"determinant", r.determinant},
              {"signature", r.knot_signature},
              {"genus2", r.genus_twice},
              {"crosscap_genus2", r.nonorientable_genus_twice},
              {"alexander", to_json(r.alexander)},
              {"slopes", r.slopes()},
              {"surfaces", std::move(surfaces)}};
}

InvariantReport report_from_json(const Json& j) {
  InvariantReport r;
  r.knot = make_knot(field<std::int64_t>(j, "alpha"), field<std::int64_t>(j, "beta"));
  r.determinant = field<std::int64_t>(j, "determinant");
  r.knot_signature = field<int>(j, "signature");
  r.genus_twice = field<int>(j, "genus2");
  r.nonorientable_genus_twice = field<int>(j, "crosscap_genus2");
  r.alexander = polynomial_from_json(field<Json>(j, "alexander"));
  for (const auto& s : field<Json>(j, "surfaces")) r.surfaces.push_back(surface_from_json(s));
  if (field<std::vector<int>>(j, "slopes") != r.slopes()) throw InvalidInput("slope list disagrees with the surfaces");
  return r;
}

std::string render_json(const InvariantReport& r) { return to_json(r).dump(2) + "\n"; }

InvariantReport parse_report_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return report_from_json(j);
}

std::string genus_string(int genus_twice) {
  return genus_twice % 2 == 0 ? std::to_string(genus_twice / 2) : std::to_string(genus_twice) + "/2";
}

std::string render_surfaces_table(const InvariantReport& r) {
  std::ostringstream os;
  os << "K(" << r.knot.alpha << "," << r.knot.beta << "): " << r.surfaces.size() << " essential spanning surfaces\n";
  os << std::left << std::setw(24) << "expansion" << std::setw(4) << "r" << std::setw(12) << "orientable" << std::setw(8) << "genus"
     << std::setw(5) << "N+" << "N-\n";
  for (const auto& s : r.surfaces)
    os << std::left << std::setw(24) << to_string(s.expansion) << std::setw(4) << s.expansion.integer_part << std::setw(12)
       << (s.orientable ? "yes" : "no") << std::setw(8) << genus_string(s.genus_twice) << std::setw(5) << s.signs.plus << s.signs.minus
       << "\n";
  return os.str();
}

std::string render_table(const InvariantReport& r) {
  std::ostringstream os;
  os << "K(" << r.knot.alpha << "," << r.knot.beta << ")\n"
     << "  determinant          " << r.determinant << "\n"
     << "  signature            " << r.knot_signature << "\n"
     << "  genus                " << genus_string(r.genus_twice) << "\n"
     << "  nonorientable genus  " << genus_string(r.nonorientable_genus_twice) << "\n"
     << "  Alexander polynomial " << r.alexander.canonical << "\n"
     << "  boundary slopes      " << join(r.slopes(), ' ') << "\n\n";
  os << std::left << std::setw(24) << "expansion" << std::setw(8) << "genus" << std::setw(6) << "N+" << std::setw(6) << "N-"
     << std::setw(9) << "sigma_S" << std::setw(7) << "slope" << "state polynomial\n";
  for (const auto& s : r.surfaces)
    os << std::left << std::setw(24) << to_string(s.expansion) << std::setw(8) << genus_string(s.genus_twice) << std::setw(6)
       << s.signs.plus << std::setw(6) << s.signs.minus << std::setw(9) << s.state_signature << std::setw(7) << s.boundary_slope
       << s.state_polynomial.canonical << "\n";
  return os.str();
}

Json surfaces_json(const InvariantReport& r) {
  Json surfaces = Json::array();
  for (const auto& s : r.surfaces)
    surfaces.push_back(Json{{"expansion", s.expansion.terms},
                            {"integer_part", s.expansion.integer_part},
                            {"orientable", s.orientable},
                            {"genus2", s.genus_twice},
                            {"n_plus", s.signs.plus},
                            {"n_minus", s.signs.minus}});
  return Json{{"alpha", r.knot.alpha}, {"beta", r.knot.beta}, {"surfaces", std::move(surfaces)}};
}

std::string census_csv_header() { return "alpha,beta,surface_count,signature,genus2,crosscap_genus2,slopes,alexander\n"; }

std::string census_csv_row(const InvariantReport& r) {
  std::ostringstream os;
  os << r.knot.alpha << ',' << r.knot.beta << ',' << r.surfaces.size() << ',' << r.knot_signature << ',' << r.genus_twice << ','
     << r.nonorientable_genus_twice << ',' << join(r.slopes(), ';') << ',' << join(r.alexander.scaled_coefficients(), ';') << '\n';
  return os.str();
}

std::string surfaces_csv_header() {
  return "alpha,beta,expansion,integer_part,orientable,genus2,n_plus,n_minus,state_signature,slope,state_polynomial\n";
}

std::string surfaces_csv_rows(const InvariantReport& r) {
  std::ostringstream os;
  for (const auto& s : r.surfaces)
    os << r.knot.alpha << ',' << r.knot.beta << ',' << join(s.expansion.terms, ';') << ',' << s.expansion.integer_part << ','
       << (s.orientable ? 1 : 0) << ',' << s.genus_twice << ',' << s.signs.plus << ',' << s.signs.minus << ',' << s.state_signature
       << ',' << s.boundary_slope << ',' << join(s.state_polynomial.scaled_coefficients(), ';') << '\n';
  return os.str();
}

CensusResult run_census(std::int64_t max_alpha, unsigned jobs, OutputFormat format) {
  if (max_alpha < 3) throw InvalidInput("census needs max_alpha >= 3");
  if (format == OutputFormat::Table) throw InvalidInput("census output is CSV or JSON");
  const auto knots = knots_up_to(max_alpha);
  std::vector<InvariantReport> reports(knots.size());
  parallel_for(knots.size(), jobs, [&](std::size_t i) { reports[i] = full_report(knots[i]); });

  CensusResult out;
  out.knots = reports.size();
  for (const auto& r : reports) out.surface_count += r.surfaces.size();
  if (format == OutputFormat::Csv) {
    std::string main = census_csv_header();
    std::string surfaces = surfaces_csv_header();
    for (const auto& r : reports) {
      main += census_csv_row(r);
      surfaces += surfaces_csv_rows(r);
    }
    out.main = std::move(main);
    out.surfaces = std::move(surfaces);
  } else {
    Json rows = Json::array();
    for (const auto& r : reports) rows.push_back(to_json(r));
    out.main = Json{{"max_alpha", max_alpha}, {"knots", std::move(rows)}}.dump(1) + "\n";
  }
  return out;
}

}  // namespace bridgestate

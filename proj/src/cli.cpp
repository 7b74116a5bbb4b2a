#include "bridgestate/cli.hpp"

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "bridgestate/errors.hpp"
#include "bridgestate/report_io.hpp"
#include "bridgestate/verify.hpp"

namespace bridgestate {

namespace {

struct FormatFlags {
  bool json = false;
  bool csv = false;
  OutputFormat format(OutputFormat fallback) const {
    return json ? OutputFormat::Json : (csv ? OutputFormat::Csv : fallback);
  }
};

void add_format_flags(CLI::App& cmd, FormatFlags& f) {
  auto* j = cmd.add_flag("--json", f.json, "Emit JSON");
  auto* c = cmd.add_flag("--csv", f.csv, "Emit CSV");
  j->excludes(c);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::ios_base::failure("cannot open " + path + " for writing");
  os << content;
  os.flush();
  if (!os) throw std::ios_base::failure("write to " + path + " failed");
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Essential spanning surfaces, state polynomials, state signatures and boundary slopes of 2-bridge knots"};
  app.name("bridgestate");
  app.require_subcommand(1);

  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  FormatFlags surfaces_fmt;
  auto* surfaces_cmd = app.add_subcommand("surfaces", "List the essential spanning surfaces of K(alpha, beta)");
  surfaces_cmd->add_option("alpha", alpha, "Determinant (odd, >= 3)")->required();
  surfaces_cmd->add_option("beta", beta, "Second 2-bridge parameter")->required();
  add_format_flags(*surfaces_cmd, surfaces_fmt);

  FormatFlags invariants_fmt;
  auto* invariants_cmd = app.add_subcommand("invariants", "Full invariant report for K(alpha, beta)");
  invariants_cmd->add_option("alpha", alpha, "Determinant (odd, >= 3)")->required();
  invariants_cmd->add_option("beta", beta, "Second 2-bridge parameter")->required();
  add_format_flags(*invariants_cmd, invariants_fmt);

  std::int64_t max_alpha = 0;
  unsigned jobs = default_jobs();
  auto* verify_cmd = app.add_subcommand("verify", "Check every property on one knot or on all knots up to --max-alpha");
  auto* v_alpha = verify_cmd->add_option("alpha", alpha, "Determinant");
  auto* v_beta = verify_cmd->add_option("beta", beta, "Second parameter");
  auto* v_max = verify_cmd->add_option("--max-alpha", max_alpha, "Verify all knots with alpha <= N");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  v_alpha->needs(v_beta);
  v_beta->needs(v_alpha);
  v_max->excludes(v_alpha);

  std::string out_path;
  std::string surfaces_path;
  FormatFlags census_fmt;
  auto* census_cmd = app.add_subcommand("census", "Invariants of every knot with alpha <= N");
  census_cmd->add_option("--max-alpha", max_alpha, "Largest alpha")->required();
  census_cmd->add_option("--out", out_path, "Output file (stdout if omitted)");
  census_cmd->add_option("--out-surfaces", surfaces_path, "Per-surface CSV companion file");
  census_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format_flags(*census_cmd, census_fmt);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*surfaces_cmd) {
      const InvariantReport r = full_report(make_knot(alpha, beta));
      switch (surfaces_fmt.format(OutputFormat::Table)) {
        case OutputFormat::Json: out << surfaces_json(r).dump(2) << "\n"; break;
        case OutputFormat::Csv: {
          out << "alpha,beta,expansion,integer_part,orientable,genus2,n_plus,n_minus\n";
          for (const auto& s : r.surfaces) {
            out << r.knot.alpha << ',' << r.knot.beta << ',';
            for (std::size_t i = 0; i < s.expansion.size(); ++i) out << (i ? ";" : "") << s.expansion.terms[i];
            out << ',' << s.expansion.integer_part << ',' << (s.orientable ? 1 : 0) << ',' << s.genus_twice << ',' << s.signs.plus << ','
                << s.signs.minus << '\n';
          }
          break;
        }
        case OutputFormat::Table: out << render_surfaces_table(r); break;
      }
    } else if (*invariants_cmd) {
      const InvariantReport r = full_report(make_knot(alpha, beta));
      switch (invariants_fmt.format(OutputFormat::Table)) {
        case OutputFormat::Json: out << render_json(r); break;
        case OutputFormat::Csv: out << census_csv_header() << census_csv_row(r); break;
        case OutputFormat::Table: out << render_table(r); break;
      }
    } else if (*verify_cmd) {
      VerifyOptions options;
      options.oracle_max_k = oracle_max_k_from_env();
      VerifySummary summary;
      if (v_max->count() > 0) {
        if (max_alpha < 3) throw InvalidInput("--max-alpha must be at least 3");
        summary = verify_range(max_alpha, options, jobs);
      } else if (v_alpha->count() > 0) {
        summary = verify_knot(make_knot(alpha, beta), options);
      } else {
        throw InvalidInput("verify needs ALPHA BETA or --max-alpha N");
      }
      if (summary.failure) {
        err << "FAIL " << summary.failure->property << ": " << summary.failure->witness << "\n";
        return kExitConsistency;
      }
      out << "PASS " << summary.knots << " knots, " << summary.surfaces << " surfaces, all properties hold\n";
    } else if (*census_cmd) {
      const OutputFormat fmt = census_fmt.format(OutputFormat::Csv);
      if (fmt == OutputFormat::Json && !surfaces_path.empty())
        throw InvalidInput("--out-surfaces applies to CSV output only; JSON embeds the surfaces");
      const CensusResult result = run_census(max_alpha, jobs, fmt);
      if (out_path.empty())
        out << result.main;
      else
        write_file(out_path, result.main);
      if (!surfaces_path.empty()) write_file(surfaces_path, result.surfaces);
      err << "census: " << result.knots << " knots, " << result.surface_count << " surfaces\n";
    }
  } catch (const ConsistencyError& e) {
    err << "consistency failure (" << e.property() << "): " << e.what() << "\n";
    return kExitConsistency;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace bridgestate

#include "urbound/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "urbound/asymptotics.hpp"
#include "urbound/mus.hpp"
#include "urbound/parallel.hpp"
#include "urbound/report.hpp"
#include "urbound/verify.hpp"

namespace urbound {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

const std::map<std::string, OutputFormat> kFormats = {{"csv", OutputFormat::Csv},
                                                      {"json", OutputFormat::Json}};

struct OutputOptions {
  OutputFormat format = OutputFormat::Csv;
  std::string path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_option("--out", o.path, "output file (default stdout)");
}

int emit(const std::string& text, const OutputOptions& o, std::ostream& out, std::ostream& err) {
  if (o.path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(o.path, std::ios::binary | std::ios::trunc);
  file << text;
  file.close();
  if (!file) {
    err << "error: cannot write " << o.path << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uncertainty relations for unitary operators"};
  app.name("urbound");
  app.require_subcommand(1);

  std::size_t sweep_d = 0;
  std::size_t sweep_steps = 100;
  int sweep_perp = 20;
  std::uint64_t sweep_seed = 0;
  OutputOptions sweep_out;
  auto* sweep = app.add_subcommand("sweep", "bounds along cos(t)|0> - sin(t)|-1>, t in [0, pi/4]");
  sweep->add_option("--d", sweep_d, "dimension")->required()->check(CLI::Range(2, 4096));
  sweep->add_option("--steps", sweep_steps, "grid points")->check(CLI::Range(1, 1000000));
  sweep->add_option("--perp-samples", sweep_perp, "random perpendicular states per point")
      ->check(CLI::Range(1, 100000));
  sweep->add_option("--seed", sweep_seed, "seed");
  add_output_flags(sweep, sweep_out);

  std::size_t dmin = 2;
  std::size_t dmax = 8;
  std::uint64_t table_seed = kMusTableSeed;
  OutputOptions table_out;
  auto* table = app.add_subcommand("mus-table", "Harper ground-state table");
  table->add_option("--dmin", dmin, "smallest dimension")->check(CLI::Range(2, 4096));
  table->add_option("--dmax", dmax, "largest dimension")->check(CLI::Range(2, 4096));
  table->add_option("--seed", table_seed, "seed for the sampled diagnostics");
  add_output_flags(table, table_out);

  std::vector<std::string> suites;
  std::vector<std::size_t> verify_dims;
  int verify_samples = 0;
  std::uint64_t verify_seed = 7;
  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", suites, "suite names (comma separated or repeated)")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--d", verify_dims, "dimensions")->delimiter(',')->check(CLI::Range(2, 4096));
  auto* samples_opt =
      verify->add_option("--samples", verify_samples, "samples per dimension")->check(CLI::Range(1, 10000000));
  verify->add_option("--seed", verify_seed, "seed");

  std::vector<std::size_t> asym_dims = {32, 64, 128};
  std::string family = "harper-ground";
  double theta = kPi / 8.0;
  OutputOptions asym_out;
  auto* asym = app.add_subcommand("asym", "large-d convergence records");
  asym->add_option("--dims,--d", asym_dims, "dimensions")->delimiter(',')->check(CLI::Range(2, 4096));
  asym->add_option("--family", family, "harper-ground or theta-sweep")
      ->check(CLI::IsMember({"harper-ground", "theta-sweep"}));
  asym->add_option("--theta", theta, "state parameter for theta-sweep");
  add_output_flags(asym, asym_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep) {
      std::ostringstream text;
      write_sweep(text, theta_sweep(sweep_d, sweep_steps, sweep_perp, sweep_seed), sweep_out.format);
      return emit(text.str(), sweep_out, out, err);
    }
    if (*table) {
      if (dmax < dmin) {
        err << "error: --dmax must be >= --dmin\n";
        return kExitUsage;
      }
      std::ostringstream text;
      write_mus_table(text, mus_table(dmin, dmax, table_seed), table_out.format);
      return emit(text.str(), table_out, out, err);
    }
    if (*asym) {
      const AsymptoticFamily fam =
          family == "theta-sweep" ? AsymptoticFamily::ThetaSweep : AsymptoticFamily::HarperGround;
      std::vector<AsymptoticRecord> rows(asym_dims.size());
      parallel_for(rows.size(), [&](std::size_t i) { rows[i] = asymptotic_gap(asym_dims[i], fam, theta); });
      std::ostringstream text;
      write_asymptotics(text, rows, asym_out.format);
      return emit(text.str(), asym_out, out, err);
    }
    if (*verify) {
      VerifyOptions opts;
      opts.dims = verify_dims;
      if (*samples_opt) opts.samples = verify_samples;
      opts.seed = verify_seed;
      bool all = true;
      for (const std::string& name : suites) {
        const SuiteReport rep = run_suite(name, opts);
        for (const std::string& line : rep.lines) out << line << '\n';
        all = all && rep.passed;
      }
      out << (all ? "verify: all suites passed" : "verify: FAILED") << '\n';
      return all ? kExitOk : kExitFailure;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    switch (e.code()) {
      case Errc::BadDimension:
      case Errc::DimensionTooSmall:
        return kExitUsage;
      default:
        return kExitFailure;
    }
  }
  return kExitUsage;
}

}  // namespace urbound

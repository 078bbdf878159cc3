#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sncoeff/caratheodory.hpp"
#include "sncoeff/classes.hpp"
#include "sncoeff/inequalities.hpp"
#include "sncoeff/io.hpp"
#include "sncoeff/rng.hpp"
#include "sncoeff/sweep.hpp"

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

double to_radians(double angle, bool radians) {
  return radians ? angle : angle * std::numbers::pi / 180.0;
}

struct ExtremalArgs {
  int n = 0;
  double nu = 0.0;
  double gamma = 0.0;
  int order = 32;
  bool radians = false;
};

int run_extremal(const ExtremalArgs& args) {
  const sncoeff::UnitModulus nu =
      sncoeff::UnitModulus::from_angle(to_radians(args.nu, args.radians));
  const sncoeff::UnitModulus gamma =
      sncoeff::UnitModulus::from_angle(to_radians(args.gamma, args.radians));
  const sncoeff::TruncatedSeries f =
      sncoeff::extremal(args.n, nu, gamma, args.order);

  std::cout << "# coefficients\n";
  std::cout << "k,re,im\n";
  for (int k = 0; k <= f.order(); ++k) {
    std::cout << k << ',' << sncoeff::format_double(f[k].real()) << ','
              << sncoeff::format_double(f[k].imag()) << '\n';
  }
  std::cout << "# successive gaps at nu\n";
  std::cout << "label,k,m,lhs,bound,slack,pass,witness_re,witness_im\n";
  bool all_pass = true;
  for (int k = 1; k <= f.order() - 1; ++k) {
    const double gap = sncoeff::successive_gap(f, args.n, k, nu);
    const sncoeff::GapReport report = sncoeff::make_report(
        "successive_gap", k, 0, gap, 1.0, sncoeff::kSlackTol, nu.value());
    all_pass = all_pass && report.pass;
    std::cout << sncoeff::csv_row(report) << '\n';
  }
  std::cout.flush();
  if (!std::cout.good()) {
    std::cerr << "error: writing to stdout failed\n";
    return kExitIo;
  }
  return all_pass ? 0 : kExitCheckFailure;
}

struct SampleArgs {
  std::uint64_t seed = 1;
  int n = 0;
  int order = 32;
};

int run_sample(const SampleArgs& args) {
  const sncoeff::HerglotzMeasure mu = sncoeff::random_measure(
      sncoeff::split_seed(args.seed, sncoeff::kMeasureStream), sncoeff::kMaxAtoms);
  const sncoeff::TruncatedSeries p = sncoeff::p_from_measure(mu, args.order);
  const sncoeff::TruncatedSeries f = sncoeff::member_from_p(p, args.n, args.order);
  nlohmann::json doc{{"seed", args.seed},
                     {"n", args.n},
                     {"measure", sncoeff::measure_to_json(mu)},
                     {"p", sncoeff::series_to_json(p)},
                     {"f", sncoeff::series_to_json(f)}};
  std::cout << doc.dump(2) << '\n';
  std::cout.flush();
  if (!std::cout.good()) {
    std::cerr << "error: writing to stdout failed\n";
    return kExitIo;
  }
  return 0;
}

struct VerifyArgs {
  std::string config_path;
  std::string output_path;
  std::string format;
  std::vector<int> n_values;
  int order = 0;
  int max_k = 0;
  int samples = 0;
  int grid = 0;
  std::uint64_t seed = 0;
  double tolerance_slack = 0.0;
  double tolerance_identity = 0.0;
  bool serial = false;
};

int run_verify(const CLI::App& cmd, const VerifyArgs& args) {
  sncoeff::RunConfig config;
  if (cmd.count("--config") > 0) {
    std::ifstream in(args.config_path);
    if (!in) {
      std::cerr << "error: cannot open config file " << args.config_path << '\n';
      return kExitIo;
    }
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "error: config file is not valid JSON: " << e.what() << '\n';
      return kExitUsage;
    }
    config = sncoeff::config_from_json(j);
  }
  if (cmd.count("--order") > 0) config.order = args.order;
  if (cmd.count("--max-k") > 0) config.max_k = args.max_k;
  if (cmd.count("--n") > 0) config.n_values = args.n_values;
  if (cmd.count("--samples") > 0) config.samples = args.samples;
  if (cmd.count("--seed") > 0) config.seed = args.seed;
  if (cmd.count("--grid") > 0) config.grid = args.grid;
  if (cmd.count("--tol-slack") > 0) config.tolerance_slack = args.tolerance_slack;
  if (cmd.count("--tol-identity") > 0)
    config.tolerance_identity = args.tolerance_identity;
  if (cmd.count("--format") > 0) {
    if (args.format == "csv") {
      config.output_format = sncoeff::OutputFormat::csv;
    } else if (args.format == "json") {
      config.output_format = sncoeff::OutputFormat::json;
    } else {
      std::cerr << "error: --format must be csv or json\n";
      return kExitUsage;
    }
  }
  if (cmd.count("--output") > 0) config.output_path = args.output_path;

  sncoeff::validate_config(config);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (config.output_path != "-") {
    file.open(config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot open output file " << config.output_path << '\n';
      return kExitIo;
    }
    out = &file;
  }

  const bool csv = config.output_format == sncoeff::OutputFormat::csv;
  if (csv) {
    *out << sncoeff::sweep_csv_header() << '\n';
  } else {
    *out << "[";
  }
  bool first = true;
  auto sink = [&](const sncoeff::SweepRow& row) {
    if (csv) {
      *out << sncoeff::sweep_csv_row(row) << '\n';
    } else {
      *out << (first ? "\n" : ",\n") << sncoeff::sweep_json_row(row).dump();
      first = false;
    }
  };
  const sncoeff::SweepSummary summary =
      sncoeff::run_verification(config, sink, !args.serial);
  if (!csv) {
    *out << "\n]\n";
  }
  out->flush();
  if (!out->good()) {
    std::cerr << "error: writing report to "
              << (config.output_path == "-" ? "stdout" : config.output_path)
              << " failed\n";
    return kExitIo;
  }

  std::cerr << "verification sweep: rows=" << summary.rows
            << " failures=" << summary.failures
            << " unsquared_exp_bound_exceedances=" << summary.unsquared_exp_bound_exceedances
            << " (informational; the squared form gates)\n";
  return summary.failures == 0 ? 0 : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructs functions in the Salagean classes as truncated power "
               "series and verifies their coefficient inequalities"};
  app.require_subcommand(1);

  ExtremalArgs extremal_args;
  CLI::App* extremal_cmd = app.add_subcommand(
      "extremal", "Print an extremal-family member and its successive gaps");
  extremal_cmd->add_option("--n", extremal_args.n, "Class order n")
      ->check(CLI::NonNegativeNumber);
  extremal_cmd->add_option("--nu", extremal_args.nu,
                           "Angle of nu (degrees unless --radians)");
  extremal_cmd->add_option("--gamma", extremal_args.gamma,
                           "Angle of gamma (degrees unless --radians)");
  extremal_cmd->add_option("--N,--order", extremal_args.order, "Truncation order")
      ->check(CLI::Range(2, 1 << 16));
  extremal_cmd->add_flag("--radians", extremal_args.radians,
                         "Interpret angles as radians");

  SampleArgs sample_args;
  CLI::App* sample_cmd = app.add_subcommand(
      "sample", "Print one random class member (measure, p, f) as JSON");
  sample_cmd->add_option("--seed", sample_args.seed, "Sample seed");
  sample_cmd->add_option("--n", sample_args.n, "Class order n")
      ->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--N,--order", sample_args.order, "Truncation order")
      ->check(CLI::Range(2, 1 << 16));

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Run the full verification sweep and write a report");
  verify_cmd->add_option("--config", verify_args.config_path,
                         "JSON config file (flags override it)");
  verify_cmd->add_option("--order", verify_args.order, "Truncation order");
  verify_cmd->add_option("--max-k", verify_args.max_k, "Largest coefficient index");
  verify_cmd->add_option("--n", verify_args.n_values,
                         "Class orders to sweep (repeatable)");
  verify_cmd->add_option("--samples", verify_args.samples, "Random samples");
  verify_cmd->add_option("--seed", verify_args.seed, "Master seed");
  verify_cmd->add_option("--grid", verify_args.grid, "Unit-circle search grid");
  verify_cmd->add_option("--tol-slack", verify_args.tolerance_slack,
                         "Inequality slack tolerance");
  verify_cmd->add_option("--tol-identity", verify_args.tolerance_identity,
                         "Identity residual tolerance");
  verify_cmd->add_option("--format", verify_args.format, "Report format: csv or json");
  verify_cmd->add_option("--output", verify_args.output_path,
                         "Report path ('-' for stdout)");
  verify_cmd->add_flag("--serial", verify_args.serial,
                       "Run every kernel on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (extremal_cmd->parsed()) {
      return run_extremal(extremal_args);
    }
    if (sample_cmd->parsed()) {
      return run_sample(sample_args);
    }
    return run_verify(*verify_cmd, verify_args);
  } catch (const std::domain_error& e) {
    std::cerr << "check failure: " << e.what() << '\n';
    return kExitCheckFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

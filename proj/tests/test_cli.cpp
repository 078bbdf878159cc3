#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

std::string& cli_path() {
  static std::string path;
  return path;
}

std::filesystem::path& scratch_dir() {
  static std::filesystem::path dir;
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::filesystem::path out_file =
      scratch_dir() / ("out_" + std::to_string(counter));
  const std::filesystem::path err_file =
      scratch_dir() / ("err_" + std::to_string(counter));
  ++counter;
  const std::string command = "\"" + cli_path() + "\" " + args + " > " +
                              out_file.string() + " 2> " + err_file.string();
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_file);
  result.err = slurp(err_file);
  return result;
}

std::filesystem::path scratch_file(const std::string& name) {
  return scratch_dir() / name;
}

void write_config(const std::filesystem::path& path, const nlohmann::json& config) {
  std::ofstream out(path);
  out << config.dump(2) << '\n';
}

nlohmann::json small_config() {
  return nlohmann::json{{"order", 12}, {"max_k", 6},  {"n_values", {0, 1}},
                        {"samples", 2}, {"seed", 3},  {"grid", 64}};
}

long long summary_field(const std::string& err, const std::string& key) {
  const std::size_t at = err.find(key + "=");
  REQUIRE(at != std::string::npos);
  return std::atoll(err.c_str() + at + key.size() + 1);
}

constexpr const char* kSweepHeader =
    "label,n,k,m,sample_seed,lhs,bound,slack,pass,witness_re,witness_im";

}  // namespace

TEST_CASE("extremal prints exact integer data for the Koebe parameters") {
  const RunResult r = run_cli("extremal --n 0 --nu 0 --gamma 0 --N 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# coefficients\nk,re,im\n") != std::string::npos);
  CHECK(r.out.find("\n8,8,0\n") != std::string::npos);
  CHECK(r.out.find("# successive gaps at nu\n"
                   "label,k,m,lhs,bound,slack,pass,witness_re,witness_im\n") !=
        std::string::npos);
  CHECK(r.out.find("successive_gap,1,0,1,1,0,1,1,0") != std::string::npos);
  CHECK(r.out.find("successive_gap,7,0,1,1,0,1,1,0") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("extremal --bogus").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("extremal --N 1").exit_code == 2);
  CHECK(run_cli("verify --format xml").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("sample output is deterministic and well-formed") {
  const RunResult first = run_cli("sample --seed 42 --n 2 --N 16");
  const RunResult second = run_cli("sample --seed 42 --n 2 --N 16");
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);

  const nlohmann::json doc = nlohmann::json::parse(first.out);
  CHECK(doc.at("seed").get<std::uint64_t>() == 42);
  CHECK(doc.at("n").get<int>() == 2);
  CHECK(doc.at("f").at("coeffs").size() == 17);
  CHECK(doc.at("f").at("coeffs").at(1).at(0).get<double>() == 1.0);
  CHECK(doc.at("f").at("coeffs").at(1).at(1).get<double>() == 0.0);

  double weight_total = 0.0;
  for (const auto& w : doc.at("measure").at("weights")) {
    weight_total += w.get<double>();
  }
  CHECK(weight_total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("verify reports are byte-identical across runs") {
  const std::filesystem::path config = scratch_file("config.json");
  write_config(config, small_config());
  const std::filesystem::path report1 = scratch_file("report1.csv");
  const std::filesystem::path report2 = scratch_file("report2.csv");

  const RunResult r1 =
      run_cli("verify --config " + config.string() + " --output " + report1.string());
  const RunResult r2 =
      run_cli("verify --config " + config.string() + " --output " + report2.string());
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  CHECK(r1.err.find("verification sweep: rows=") != std::string::npos);
  CHECK(summary_field(r1.err, "failures") == 0);

  const std::string body1 = slurp(report1);
  const std::string body2 = slurp(report2);
  CHECK(body1 == body2);
  CHECK(body1.rfind(std::string(kSweepHeader) + "\n", 0) == 0);
  CHECK(summary_field(r1.err, "rows") ==
        static_cast<long long>(std::count(body1.begin(), body1.end(), '\n')) - 1);
}

TEST_CASE("verify defaults to csv on stdout") {
  const std::filesystem::path config = scratch_file("config_stdout.json");
  write_config(config, small_config());
  const RunResult r = run_cli("verify --config " + config.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind(std::string(kSweepHeader) + "\n", 0) == 0);
}

TEST_CASE("verify emits parseable json when asked") {
  const std::filesystem::path config = scratch_file("config_json.json");
  write_config(config, small_config());
  const std::filesystem::path report = scratch_file("report.json");
  const RunResult r = run_cli("verify --config " + config.string() +
                              " --format json --output " + report.string());
  CHECK(r.exit_code == 0);

  const nlohmann::json rows = nlohmann::json::parse(slurp(report));
  REQUIRE(rows.is_array());
  CHECK(static_cast<long long>(rows.size()) == summary_field(r.err, "rows"));
  for (const char* key : {"label", "n", "k", "m", "sample_seed", "lhs", "bound",
                          "slack", "pass", "witness_re", "witness_im"}) {
    CHECK(rows.at(0).contains(key));
  }
}

TEST_CASE("a negative slack tolerance forces check failures") {
  const std::filesystem::path config = scratch_file("config_neg.json");
  write_config(config, small_config());
  const std::filesystem::path report = scratch_file("report_neg.csv");
  const RunResult r = run_cli("verify --config " + config.string() +
                              " --tol-slack=-1 --output " + report.string());
  CHECK(r.exit_code == 1);
  CHECK(summary_field(r.err, "failures") > 0);
}

TEST_CASE("config file problems map to distinct exit codes") {
  const std::filesystem::path bad_key = scratch_file("bad_key.json");
  write_config(bad_key, nlohmann::json{{"bogus", 1}});
  const RunResult unknown = run_cli("verify --config " + bad_key.string());
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.err.find("unknown key") != std::string::npos);

  const std::filesystem::path not_json = scratch_file("not_json.json");
  {
    std::ofstream out(not_json);
    out << "not json at all\n";
  }
  CHECK(run_cli("verify --config " + not_json.string()).exit_code == 2);

  CHECK(run_cli("verify --config " + scratch_file("absent.json").string()).exit_code ==
        3);

  const std::filesystem::path config = scratch_file("config_invalid.json");
  write_config(config, small_config());
  CHECK(run_cli("verify --config " + config.string() + " --samples 0").exit_code == 2);
}

TEST_CASE("command-line flags override the config file") {
  const std::filesystem::path config = scratch_file("config_override.json");
  write_config(config, small_config());
  const std::filesystem::path report = scratch_file("report_override.csv");

  const RunResult base =
      run_cli("verify --config " + config.string() + " --output " + report.string());
  const RunResult fewer = run_cli("verify --config " + config.string() +
                                  " --samples 1 --output " + report.string());
  CHECK(base.exit_code == 0);
  CHECK(fewer.exit_code == 0);
  CHECK(summary_field(fewer.err, "rows") < summary_field(base.err, "rows"));
}

int main(int argc, char** argv) {
  std::vector<char*> doctest_argv;
  for (int i = 0; i < argc; ++i) {
    if (i > 0 && argv[i][0] != '-' && cli_path().empty()) {
      cli_path() = argv[i];
      continue;
    }
    doctest_argv.push_back(argv[i]);
  }
  if (cli_path().empty()) {
    if (const char* env = std::getenv("SNCOEFF_BIN")) {
      cli_path() = env;
    }
  }
  if (cli_path().empty()) {
    std::fprintf(stderr, "usage: test_cli <path-to-sncoeff-binary>\n");
    return 1;
  }

  scratch_dir() = std::filesystem::temp_directory_path() /
                  ("sncoeff_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(scratch_dir());

  doctest::Context context(static_cast<int>(doctest_argv.size()), doctest_argv.data());
  const int rc = context.run();

  std::error_code ec;
  std::filesystem::remove_all(scratch_dir(), ec);
  return rc;
}

#include "sncoeff/io.hpp"

#include <set>
#include <stdexcept>

namespace sncoeff {

namespace {

nlohmann::json complex_pair(Complex c) {
  return nlohmann::json::array({c.real(), c.imag()});
}

}  // namespace

nlohmann::json series_to_json(const TruncatedSeries& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = 0; k <= f.order(); ++k) {
    coeffs.push_back(complex_pair(f[k]));
  }
  return nlohmann::json{{"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw std::invalid_argument("series_from_json: need object with order and coeffs");
  }
  const int order = j.at("order").get<int>();
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1) {
    throw std::invalid_argument("series_from_json: coeffs must hold order+1 pairs");
  }
  std::vector<Complex> c;
  c.reserve(coeffs.size());
  for (const auto& entry : coeffs) {
    if (!entry.is_array() || entry.size() != 2) {
      throw std::invalid_argument("series_from_json: each coefficient is [re, im]");
    }
    c.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
  }
  return TruncatedSeries(order, std::move(c));
}

nlohmann::json measure_to_json(const HerglotzMeasure& mu) {
  return nlohmann::json{{"atoms", mu.atoms()}, {"weights", mu.weights()}};
}

HerglotzMeasure measure_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j.contains("weights")) {
    throw std::invalid_argument("measure_from_json: need object with atoms and weights");
  }
  return HerglotzMeasure(j.at("atoms").get<std::vector<double>>(),
                         j.at("weights").get<std::vector<double>>());
}

std::string sweep_csv_header() {
  return "label,n,k,m,sample_seed,lhs,bound,slack,pass,witness_re,witness_im";
}

std::string sweep_csv_row(const SweepRow& row) {
  const GapReport& r = row.report;
  std::string line;
  line.reserve(128);
  line += r.label;
  line += ',';
  if (row.n) {
    line += std::to_string(*row.n);
  }
  line += ',';
  line += std::to_string(r.k);
  line += ',';
  line += std::to_string(r.m);
  line += ',';
  if (row.sample_seed) {
    line += std::to_string(*row.sample_seed);
  }
  line += ',';
  line += format_double(r.lhs);
  line += ',';
  line += format_double(r.bound);
  line += ',';
  line += format_double(r.slack);
  line += ',';
  line += r.pass ? "1" : "0";
  line += ',';
  if (r.witness) {
    line += format_double(r.witness->real());
    line += ',';
    line += format_double(r.witness->imag());
  } else {
    line += ',';
  }
  return line;
}

nlohmann::json sweep_json_row(const SweepRow& row) {
  const GapReport& r = row.report;
  nlohmann::json j{{"label", r.label}, {"k", r.k},         {"m", r.m},
                   {"lhs", r.lhs},     {"bound", r.bound}, {"slack", r.slack},
                   {"pass", r.pass}};
  j["n"] = row.n ? nlohmann::json(*row.n) : nlohmann::json(nullptr);
  j["sample_seed"] =
      row.sample_seed ? nlohmann::json(*row.sample_seed) : nlohmann::json(nullptr);
  j["witness_re"] = r.witness ? nlohmann::json(r.witness->real()) : nlohmann::json(nullptr);
  j["witness_im"] = r.witness ? nlohmann::json(r.witness->imag()) : nlohmann::json(nullptr);
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("config: top level must be a JSON object");
  }
  static const std::set<std::string> known = {
      "order",          "max_k", "n_values",        "samples",
      "seed",           "grid",  "tolerance_slack", "tolerance_identity",
      "output_format",  "output_path"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (known.find(key) == known.end()) {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  RunConfig config;
  if (j.contains("order")) config.order = j.at("order").get<int>();
  if (j.contains("max_k")) config.max_k = j.at("max_k").get<int>();
  if (j.contains("n_values")) config.n_values = j.at("n_values").get<std::vector<int>>();
  if (j.contains("samples")) config.samples = j.at("samples").get<int>();
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("grid")) config.grid = j.at("grid").get<int>();
  if (j.contains("tolerance_slack"))
    config.tolerance_slack = j.at("tolerance_slack").get<double>();
  if (j.contains("tolerance_identity"))
    config.tolerance_identity = j.at("tolerance_identity").get<double>();
  if (j.contains("output_format")) {
    const std::string format = j.at("output_format").get<std::string>();
    if (format == "csv") {
      config.output_format = OutputFormat::csv;
    } else if (format == "json") {
      config.output_format = OutputFormat::json;
    } else {
      throw std::invalid_argument("config: output_format must be csv or json");
    }
  }
  if (j.contains("output_path"))
    config.output_path = j.at("output_path").get<std::string>();
  return config;
}

nlohmann::json config_to_json(const RunConfig& config) {
  return nlohmann::json{
      {"order", config.order},
      {"max_k", config.max_k},
      {"n_values", config.n_values},
      {"samples", config.samples},
      {"seed", config.seed},
      {"grid", config.grid},
      {"tolerance_slack", config.tolerance_slack},
      {"tolerance_identity", config.tolerance_identity},
      {"output_format", config.output_format == OutputFormat::csv ? "csv" : "json"},
      {"output_path", config.output_path}};
}

}  // namespace sncoeff

#pragma once

#include <string>

#include "sncoeff/caratheodory.hpp"
#include "sncoeff/report.hpp"
#include "sncoeff/series.hpp"
#include "sncoeff/sweep.hpp"

#include "json.hpp"

namespace sncoeff {

// {"order": N, "coeffs": [[re, im], ...]} with order+1 coefficient pairs.
nlohmann::json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const nlohmann::json& j);

// {"atoms": [t...], "weights": [w...]}
nlohmann::json measure_to_json(const HerglotzMeasure& mu);
HerglotzMeasure measure_from_json(const nlohmann::json& j);

// Sweep report rows. CSV column order is fixed:
//   label,n,k,m,sample_seed,lhs,bound,slack,pass,witness_re,witness_im
// n, sample_seed and the witness columns are empty when absent. The JSON row
// is an object with the same field names, null where the CSV is empty.
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);
nlohmann::json sweep_json_row(const SweepRow& row);

// RunConfig round trip; missing keys keep defaults, unknown keys are an
// error so typos in config files fail loudly instead of being ignored.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& config);

}  // namespace sncoeff

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sncoeff/report.hpp"

namespace sncoeff {

// Tolerance for sampled positivity minima: truncation tails pull the scanned
// minimum slightly below the true one, so a hard zero cutoff would false-fail
// valid members.
inline constexpr double kMembershipTol = 1e-3;
// Order and polar grid used for all positivity scans in the sweep. 48 terms
// at radius 0.9 keep the truncation tail of a bounded-coefficient series
// well under kMembershipTol; grid 256 means 64 rings by 256 spokes.
inline constexpr int kScanOrder = 48;
inline constexpr int kScanGrid = 256;
inline constexpr double kScanRadius = 0.9;

// Sub-stream indices fed to split_seed(sample_seed, stream). Fixed and public
// so a row's sample_seed column is enough to rebuild everything the sample
// used, inside or outside the sweep.
inline constexpr std::uint64_t kMeasureStream = 1;
inline constexpr std::uint64_t kPhiStream = 2;
inline constexpr std::uint64_t kOddStream = 3;
inline constexpr std::uint64_t kConvexStream = 4;
inline constexpr std::uint64_t kCloseStream = 5;

enum class OutputFormat { csv, json };

struct RunConfig {
  int order = 32;
  int max_k = 12;
  std::vector<int> n_values = {0, 1, 2, 3};
  int samples = 500;
  std::uint64_t seed = 1;
  int grid = 2048;
  double tolerance_slack = kSlackTol;
  double tolerance_identity = kIdentityTol;
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path = "-";
};

// Throws std::invalid_argument when the config violates its invariants:
// order >= max_k + 1, max_k >= 1, samples >= 1, grid >= 8, n_values nonempty
// with nonnegative entries. Negative tolerances are allowed; they force
// failures, which is a supported way to exercise the failure path.
void validate_config(const RunConfig& config);

struct SweepSummary {
  long long rows = 0;
  long long failures = 0;
  // Exceedances of the unsquared exponentiated-series bound. Expected to be
  // nonzero on random inputs (the unsquared form is not a theorem); tracked
  // so the discrepancy is reported, never silently absorbed. The squared
  // rows are what gates.
  long long unsquared_exp_bound_exceedances = 0;
};

using RowSink = std::function<void(const SweepRow&)>;

// Runs the whole verification sweep, emitting one row per check through the
// sink in a fixed order that does not depend on thread count. The sink is
// always called from the calling thread.
//
// Stages, in emission order:
//   1. extremal family: sharpness and recurrence identities over a fixed
//      lattice of unimodular parameter pairs;
//   2. per-sample checks: positive-real-part generator bounds, the weighted
//      nu-search bound, exponentiated-series bounds, then per class order n
//      the gap minimum / modulus / coefficient bounds and a positivity scan,
//      odd members, and the close-to-convex chain.
SweepSummary run_verification(const RunConfig& config, const RowSink& sink,
                              bool parallel);

}  // namespace sncoeff

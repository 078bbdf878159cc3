#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sncoeff/series.hpp"

namespace sncoeff {

// Slack below this (i.e. lhs exceeding bound by more) fails a check.
inline constexpr double kSlackTol = 1e-6;
// Tighter tolerance for exact algebraic identities checked in floating point.
inline constexpr double kIdentityTol = 1e-10;

// Outcome of one inequality check: lhs <= bound up to a tolerance. The
// witness, when present, is the point on the unit circle (or the unimodular
// parameter) at which the lhs was attained.
struct GapReport {
  std::string label;
  int k = 0;
  int m = 0;
  double lhs = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::optional<Complex> witness;
};

GapReport make_report(std::string label, int k, int m, double lhs, double bound,
                      double tol = kSlackTol,
                      std::optional<Complex> witness = std::nullopt);

// One row of a verification sweep: a report plus where it came from.
struct SweepRow {
  GapReport report;
  std::optional<int> n;
  std::optional<std::uint64_t> sample_seed;
};

// Shortest round-trippable decimal form, identical across platforms.
std::string format_double(double value);

// label,k,m,lhs,bound,slack,pass,witness_re,witness_im
// witness columns are empty when no witness was recorded.
std::string csv_row(const GapReport& report);

}  // namespace sncoeff

#pragma once

#include <cstdint>
#include <vector>

#include "sncoeff/report.hpp"
#include "sncoeff/series.hpp"

namespace sncoeff {

// Cap on atoms drawn by random_measure throughout the verification sweep.
inline constexpr int kMaxAtoms = 8;

// Finite atomic probability measure on the unit circle. Every function with
// positive real part and value 1 at the origin is an average of the kernels
// (1 + e^{it}z)/(1 - e^{it}z); a finite atomic measure picks a convex
// combination of finitely many of them, which keeps membership exact by
// construction.
class HerglotzMeasure {
 public:
  // Angles in radians, reduced mod 2*pi; weights must be strictly positive
  // and sum to 1 within kNormalizationTol.
  HerglotzMeasure(std::vector<double> atoms, std::vector<double> weights);

  const std::vector<double>& atoms() const noexcept { return atoms_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  std::vector<double> atoms_;
  std::vector<double> weights_;
};

// Coefficients p_0 = 1, p_j = 2 sum_i w_i e^{i j t_i} for 1 <= j <= N.
TruncatedSeries p_from_measure(const HerglotzMeasure& mu, int order);

// Deterministic measure from a seed: 1..max_atoms atoms uniform on [0, 2*pi),
// weights as normalized exponentials of uniform draws.
HerglotzMeasure random_measure(std::uint64_t seed, int max_atoms);

// One report per index j in 1..p.order(): lhs |p_j|, bound 2.
// Requires p_0 = 1.
std::vector<GapReport> check_caratheodory_bound(const TruncatedSeries& p,
                                                double tol = kSlackTol);

// Minimum of Re p over the polar grid with grid/4 rings and grid spokes,
// radii radius*s/(grid/4), angles 2*pi*t/grid. A sampled positivity witness;
// truncation keeps it a little below the true minimum, so callers compare
// against a small negative tolerance rather than zero.
double min_real_part(const TruncatedSeries& p, double radius, int grid);
double min_real_part_serial(const TruncatedSeries& p, double radius, int grid);

}  // namespace sncoeff

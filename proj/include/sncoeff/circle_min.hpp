#pragma once

#include <functional>

#include "sncoeff/series.hpp"

namespace sncoeff {

// Result of minimizing a function over the unit circle.
struct CircleMin {
  UnitModulus arg;
  double value;
};

// Objective as a function of the angle in radians. Must be pure: the parallel
// driver calls it concurrently, and determinism relies on every call with the
// same argument producing the same bits.
using AngleObjective = std::function<double(double)>;

// Scans the angles 2*pi*t/grid, t = 0..grid-1, then sharpens the best grid
// cell with a fixed-iteration golden-section pass. Ties in the scan keep the
// smallest t; the refined point is only taken when strictly smaller, so the
// result is deterministic and never worse than the plain grid minimum.
CircleMin min_on_circle(const AngleObjective& objective, int grid);

// Same algorithm with the scan loop left serial. Kept as the reference the
// parallel version is tested against.
CircleMin min_on_circle_serial(const AngleObjective& objective, int grid);

}  // namespace sncoeff

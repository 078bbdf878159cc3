#include "sncoeff/circle_min.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sncoeff {

namespace {

constexpr int kRefineIterations = 60;

double grid_angle(int t, int grid) {
  return 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(grid);
}

void require_grid(int grid) {
  if (grid < 8) {
    throw std::invalid_argument("min_on_circle: grid must be at least 8");
  }
}

// Golden-section search on [lo, hi] with a fixed iteration count. Returns the
// best (angle, value) pair among the points it evaluated; on ties the earlier
// point is kept.
std::pair<double, double> refine(const AngleObjective& objective, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  double best_angle = x1;
  double best_value = f1;
  if (f2 < best_value) {
    best_angle = x2;
    best_value = f2;
  }
  for (int i = 0; i < kRefineIterations; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = objective(x2);
    }
    if (f1 < best_value) {
      best_angle = x1;
      best_value = f1;
    }
    if (f2 < best_value) {
      best_angle = x2;
      best_value = f2;
    }
  }
  return {best_angle, best_value};
}

CircleMin scan_then_refine(const AngleObjective& objective, int grid, bool parallel) {
  require_grid(grid);
  std::vector<double> values(static_cast<std::size_t>(grid));
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int t = 0; t < grid; ++t) {
      values[static_cast<std::size_t>(t)] = objective(grid_angle(t, grid));
    }
  } else {
    for (int t = 0; t < grid; ++t) {
      values[static_cast<std::size_t>(t)] = objective(grid_angle(t, grid));
    }
  }

  int best_t = 0;
  for (int t = 1; t < grid; ++t) {
    if (values[static_cast<std::size_t>(t)] < values[static_cast<std::size_t>(best_t)]) {
      best_t = t;
    }
  }

  const double step = 2.0 * std::numbers::pi / static_cast<double>(grid);
  const double center = grid_angle(best_t, grid);
  auto [refined_angle, refined_value] = refine(objective, center - step, center + step);

  double best_angle = center;
  double best_value = values[static_cast<std::size_t>(best_t)];
  if (refined_value < best_value) {
    best_angle = refined_angle;
    best_value = refined_value;
  }
  return CircleMin{UnitModulus::from_angle(best_angle), best_value};
}

}  // namespace

CircleMin min_on_circle(const AngleObjective& objective, int grid) {
  return scan_then_refine(objective, grid, true);
}

CircleMin min_on_circle_serial(const AngleObjective& objective, int grid) {
  return scan_then_refine(objective, grid, false);
}

}  // namespace sncoeff

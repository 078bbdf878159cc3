#include "sncoeff/grid_scan.hpp"

#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "sncoeff/report.hpp"

namespace sncoeff {

namespace {

void require_polar_args(double radius, int rings, int spokes) {
  if (!(radius > 0.0) || !(radius < 1.0)) {
    throw std::invalid_argument("polar grid: radius must lie in (0, 1)");
  }
  if (rings < 1 || spokes < 1) {
    throw std::invalid_argument("polar grid: rings and spokes must be positive");
  }
}

Complex grid_point(double radius, int rings, int spokes, int s, int t) {
  const double r = radius * static_cast<double>(s) / static_cast<double>(rings);
  const double theta =
      2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(spokes);
  return std::polar(r, theta);
}

double scan_real(const TruncatedSeries& h, const TruncatedSeries* guard,
                 double radius, int rings, int spokes, bool parallel) {
  require_polar_args(radius, rings, spokes);
  const std::size_t total = static_cast<std::size_t>(rings) * static_cast<std::size_t>(spokes);
  std::vector<double> values(total);
  std::vector<char> guard_zero(guard ? total : 0, 0);

  auto visit = [&](int s, int t) {
    const Complex z = grid_point(radius, rings, spokes, s, t);
    const std::size_t idx =
        static_cast<std::size_t>(s - 1) * static_cast<std::size_t>(spokes) +
        static_cast<std::size_t>(t);
    if (guard != nullptr && evaluate(*guard, z) == Complex(0.0, 0.0)) {
      guard_zero[idx] = 1;
      values[idx] = 0.0;
      return;
    }
    values[idx] = evaluate(h, z).real();
  };

  if (parallel) {
#pragma omp parallel for collapse(2) schedule(static)
    for (int s = 1; s <= rings; ++s) {
      for (int t = 0; t < spokes; ++t) {
        visit(s, t);
      }
    }
  } else {
    for (int s = 1; s <= rings; ++s) {
      for (int t = 0; t < spokes; ++t) {
        visit(s, t);
      }
    }
  }

  if (guard != nullptr) {
    for (std::size_t idx = 0; idx < total; ++idx) {
      if (guard_zero[idx]) {
        const int s = static_cast<int>(idx / static_cast<std::size_t>(spokes)) + 1;
        const int t = static_cast<int>(idx % static_cast<std::size_t>(spokes));
        const Complex z = grid_point(radius, rings, spokes, s, t);
        throw std::domain_error("denominator vanishes at grid point s=" +
                                std::to_string(s) + " t=" + std::to_string(t) +
                                " z=" + format_double(z.real()) + "+" +
                                format_double(z.imag()) + "i");
      }
    }
  }

  double best = values[0];
  for (std::size_t idx = 1; idx < total; ++idx) {
    if (values[idx] < best) {
      best = values[idx];
    }
  }
  return best;
}

}  // namespace

double min_real_on_polar_grid(const TruncatedSeries& h, double radius, int rings,
                              int spokes) {
  return scan_real(h, nullptr, radius, rings, spokes, true);
}

double min_real_on_polar_grid_serial(const TruncatedSeries& h, double radius,
                                     int rings, int spokes) {
  return scan_real(h, nullptr, radius, rings, spokes, false);
}

double min_real_guarded(const TruncatedSeries& ratio, const TruncatedSeries& guard,
                        double radius, int rings, int spokes) {
  return scan_real(ratio, &guard, radius, rings, spokes, true);
}

double min_real_guarded_serial(const TruncatedSeries& ratio,
                               const TruncatedSeries& guard, double radius,
                               int rings, int spokes) {
  return scan_real(ratio, &guard, radius, rings, spokes, false);
}

}  // namespace sncoeff

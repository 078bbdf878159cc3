#pragma once

#include "sncoeff/series.hpp"

namespace sncoeff {

// Minimum of Re h(z) over the polar grid z = (radius*s/rings) e^{2*pi*i*t/spokes},
// s = 1..rings, t = 0..spokes-1.
double min_real_on_polar_grid(const TruncatedSeries& h, double radius, int rings,
                              int spokes);
double min_real_on_polar_grid_serial(const TruncatedSeries& h, double radius,
                                     int rings, int spokes);

// Same grid, but the scanned value is Re ratio(z) while guard(z) is evaluated
// alongside; an exact zero of guard at a grid point throws std::domain_error
// naming the point. Used for quotients whose denominator must not vanish.
double min_real_guarded(const TruncatedSeries& ratio, const TruncatedSeries& guard,
                        double radius, int rings, int spokes);
double min_real_guarded_serial(const TruncatedSeries& ratio,
                               const TruncatedSeries& guard, double radius,
                               int rings, int spokes);

}  // namespace sncoeff

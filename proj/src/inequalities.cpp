#include "sncoeff/inequalities.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sncoeff {

namespace {

void require_gap_args(const TruncatedSeries& f, int k, const char* op) {
  if (!is_normalized(f)) {
    throw std::invalid_argument(std::string(op) + ": series must be normalized");
  }
  if (k < 1 || k > f.order() - 1) {
    throw std::out_of_range(std::string(op) + ": k must lie in [1, order-1], got " +
                            std::to_string(k));
  }
}

// k^{1-n}, split so the integer power itself is always exact.
double power_bound(int k, int n) {
  if (1 - n >= 0) {
    return ipow(static_cast<double>(k), 1 - n);
  }
  return 1.0 / ipow(static_cast<double>(k), n - 1);
}

double lebedev_bound(const TruncatedSeries& phi, int k) {
  double exponent = 0.0;
  for (int j = 1; j <= k; ++j) {
    exponent += static_cast<double>(j) * std::norm(phi[j]) - 1.0 / static_cast<double>(j);
  }
  return std::exp(exponent);
}

void require_lebedev_args(const TruncatedSeries& phi, int k) {
  if (std::abs(phi[0]) > kNormalizationTol) {
    throw std::invalid_argument("lebedev_milin_check: phi(0) must be 0");
  }
  if (k < 1 || k > phi.order()) {
    throw std::out_of_range("lebedev_milin_check: k must lie in [1, order]");
  }
}

double leung_objective(const TruncatedSeries& p, int k, Complex nu) {
  double sum = 0.0;
  Complex power(1.0, 0.0);
  for (int j = 1; j <= k; ++j) {
    power *= nu;
    sum += (1.0 / static_cast<double>(j)) * std::norm(p[j] - power);
  }
  return sum;
}

}  // namespace

double successive_gap(const TruncatedSeries& f, SalageanOrder n, int k,
                      UnitModulus nu) {
  require_gap_args(f, k, "successive_gap");
  const double high = ipow(static_cast<double>(k + 1), n.value());
  const double low = ipow(static_cast<double>(k), n.value());
  return std::abs(high * f[k + 1] - nu.value() * (low * f[k]));
}

namespace {

CircleMin gap_min(const TruncatedSeries& f, SalageanOrder n, int k, int grid,
                  bool parallel) {
  require_gap_args(f, k, "min_gap_over_circle");
  const Complex high = ipow(static_cast<double>(k + 1), n.value()) * f[k + 1];
  const Complex low = ipow(static_cast<double>(k), n.value()) * f[k];
  auto objective = [high, low](double theta) {
    return std::abs(high - std::polar(1.0, theta) * low);
  };
  return parallel ? min_on_circle(objective, grid)
                  : min_on_circle_serial(objective, grid);
}

}  // namespace

CircleMin min_gap_over_circle(const TruncatedSeries& f, SalageanOrder n, int k,
                              int grid) {
  return gap_min(f, n, k, grid, true);
}

CircleMin min_gap_over_circle_serial(const TruncatedSeries& f, SalageanOrder n,
                                     int k, int grid) {
  return gap_min(f, n, k, grid, false);
}

GapReport modulus_gap(const TruncatedSeries& f, SalageanOrder n, int k, double tol) {
  require_gap_args(f, k, "modulus_gap");
  const double high = ipow(static_cast<double>(k + 1), n.value()) * std::abs(f[k + 1]);
  const double low = ipow(static_cast<double>(k), n.value()) * std::abs(f[k]);
  return make_report("modulus_gap", k, 0, std::abs(high - low), 1.0, tol);
}

std::vector<GapReport> coeff_bound(const TruncatedSeries& f, SalageanOrder n,
                                   double tol) {
  if (!is_normalized(f)) {
    throw std::invalid_argument("coeff_bound: series must be normalized");
  }
  std::vector<GapReport> reports;
  reports.reserve(static_cast<std::size_t>(f.order() > 1 ? f.order() - 1 : 0));
  for (int k = 2; k <= f.order(); ++k) {
    reports.push_back(make_report("coeff_bound", k, 0, std::abs(f[k]),
                                  power_bound(k, n.value()), tol));
  }
  return reports;
}

std::vector<GapReport> odd_coeff_bound(const TruncatedSeries& f, SalageanOrder n,
                                       double tol) {
  if (!is_normalized(f)) {
    throw std::invalid_argument("odd_coeff_bound: series must be normalized");
  }
  for (int k = 2; k <= f.order(); k += 2) {
    if (std::abs(f[k]) > kNormalizationTol) {
      throw std::invalid_argument("odd_coeff_bound: even coefficient " +
                                  std::to_string(k) + " is not zero");
    }
  }
  std::vector<GapReport> reports;
  for (int k = 3; k <= f.order(); k += 2) {
    reports.push_back(make_report("odd_coeff_bound", k, 0, std::abs(f[k]),
                                  1.0 / ipow(static_cast<double>(k), n.value()),
                                  tol));
  }
  return reports;
}

GapReport lebedev_milin_check(const TruncatedSeries& phi, int k, double tol) {
  require_lebedev_args(phi, k);
  const TruncatedSeries beta = exp_series(resized(phi, k));
  return make_report("exp_coeff_bound", k, 0, std::abs(beta[k]),
                     lebedev_bound(phi, k), tol);
}

GapReport lebedev_milin_check_squared(const TruncatedSeries& phi, int k,
                                      double tol) {
  require_lebedev_args(phi, k);
  const TruncatedSeries beta = exp_series(resized(phi, k));
  return make_report("exp_coeff_bound_squared", k, 0, std::norm(beta[k]),
                     lebedev_bound(phi, k), tol);
}

double harmonic_number(int k) {
  if (k < 1) {
    throw std::invalid_argument("harmonic_number: k must be positive");
  }
  double sum = 0.0;
  for (int j = 1; j <= k; ++j) {
    sum += 1.0 / static_cast<double>(j);
  }
  return sum;
}

namespace {

LeungResult leung_search(const TruncatedSeries& p, int k, int grid, bool parallel) {
  if (std::abs(p[0] - Complex(1.0, 0.0)) > kNormalizationTol) {
    throw std::invalid_argument("leung_nu_search: constant term of p must be 1");
  }
  if (k < 1 || k > p.order()) {
    throw std::out_of_range("leung_nu_search: k must lie in [1, order]");
  }
  auto objective = [&p, k](double theta) {
    return leung_objective(p, k, std::polar(1.0, theta));
  };
  const CircleMin found =
      parallel ? min_on_circle(objective, grid) : min_on_circle_serial(objective, grid);
  return LeungResult{found.arg, found.value, harmonic_number(k)};
}

}  // namespace

LeungResult leung_nu_search(const TruncatedSeries& p, int k, int grid) {
  return leung_search(p, k, grid, true);
}

LeungResult leung_nu_search_serial(const TruncatedSeries& p, int k, int grid) {
  return leung_search(p, k, grid, false);
}

GapReport robertson_gap(const TruncatedSeries& f, int k, int m, double tol) {
  if (!is_normalized(f)) {
    throw std::invalid_argument("robertson_gap: series must be normalized");
  }
  if (k == m) {
    throw std::invalid_argument("robertson_gap: k = m degenerates the bound");
  }
  if (k < 1 || m < 1 || k > f.order() || m > f.order()) {
    throw std::out_of_range("robertson_gap: indices must lie in [1, order]");
  }
  const double lhs = std::abs(static_cast<double>(k) * std::abs(f[k]) -
                              static_cast<double>(m) * std::abs(f[m]));
  const double bound = std::abs(static_cast<double>(k) * k - static_cast<double>(m) * m);
  return make_report("robertson_pair", k, m, lhs, bound, tol);
}

GapReport robertson_step(const TruncatedSeries& f, int k, double tol) {
  if (!is_normalized(f)) {
    throw std::invalid_argument("robertson_step: series must be normalized");
  }
  if (k < 1 || k + 1 > f.order()) {
    throw std::out_of_range("robertson_step: k must lie in [1, order-1]");
  }
  const double lhs = std::abs(static_cast<double>(k + 1) * std::abs(f[k + 1]) -
                              static_cast<double>(k) * std::abs(f[k]));
  return make_report("robertson_step", k, 0, lhs, static_cast<double>(2 * k + 1), tol);
}

double convolution_identity(const TruncatedSeries& f, const TruncatedSeries& g,
                            const TruncatedSeries& p, int k) {
  if (f.order() != g.order()) {
    throw std::invalid_argument("convolution_identity: f and g orders differ");
  }
  if (k < 1 || k + 1 > f.order()) {
    throw std::out_of_range("convolution_identity: k must lie in [1, order-1]");
  }
  const TruncatedSeries c =
      mul(derivative(resized(g, f.order())), resized(p, f.order() - 1));
  const Complex lhs = static_cast<double>(k + 1) * f[k + 1] - static_cast<double>(k) * f[k];
  const Complex rhs = c[k] - c[k - 1];
  return std::abs(lhs - rhs);
}

}  // namespace sncoeff

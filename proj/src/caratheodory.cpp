#include "sncoeff/caratheodory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "sncoeff/grid_scan.hpp"
#include "sncoeff/rng.hpp"

namespace sncoeff {

namespace {

double reduce_angle(double t) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(t, two_pi);
  if (r < 0.0) {
    r += two_pi;
  }
  return r;
}

void require_p(const TruncatedSeries& p, const char* op) {
  if (std::abs(p[0] - Complex(1.0, 0.0)) > kNormalizationTol) {
    throw std::invalid_argument(std::string(op) + ": constant term must be 1");
  }
}

}  // namespace

HerglotzMeasure::HerglotzMeasure(std::vector<double> atoms, std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.empty()) {
    throw std::invalid_argument("HerglotzMeasure: at least one atom required");
  }
  if (atoms_.size() != weights_.size()) {
    throw std::invalid_argument("HerglotzMeasure: atoms and weights differ in length");
  }
  double total = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) {
      throw std::invalid_argument("HerglotzMeasure: weights must be strictly positive");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kNormalizationTol) {
    throw std::invalid_argument("HerglotzMeasure: weights must sum to 1, got " +
                                std::to_string(total));
  }
  for (double& t : atoms_) {
    if (!std::isfinite(t)) {
      throw std::invalid_argument("HerglotzMeasure: non-finite atom angle");
    }
    t = reduce_angle(t);
  }
}

TruncatedSeries p_from_measure(const HerglotzMeasure& mu, int order) {
  TruncatedSeries p(order);
  p.set(0, Complex(1.0, 0.0));
  const std::size_t m = mu.atoms().size();
  // Track e^{i j t_i} by repeated multiplication; one std::polar per atom.
  std::vector<Complex> unit(m);
  std::vector<Complex> power(m);
  for (std::size_t i = 0; i < m; ++i) {
    unit[i] = std::polar(1.0, mu.atoms()[i]);
    power[i] = Complex(1.0, 0.0);
  }
  for (int j = 1; j <= order; ++j) {
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      power[i] *= unit[i];
      sum += mu.weights()[i] * power[i];
    }
    p.set(j, 2.0 * sum);
  }
  return p;
}

HerglotzMeasure random_measure(std::uint64_t seed, int max_atoms) {
  if (max_atoms < 1) {
    throw std::invalid_argument("random_measure: max_atoms must be at least 1");
  }
  Rng rng(seed);
  const int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_atoms)));
  std::vector<double> atoms(static_cast<std::size_t>(count));
  std::vector<double> weights(static_cast<std::size_t>(count));
  for (double& t : atoms) {
    t = rng.uniform(0.0, 2.0 * std::numbers::pi);
  }
  double total = 0.0;
  for (double& w : weights) {
    w = std::exp(rng.uniform());
    total += w;
  }
  for (double& w : weights) {
    w /= total;
  }
  return HerglotzMeasure(std::move(atoms), std::move(weights));
}

std::vector<GapReport> check_caratheodory_bound(const TruncatedSeries& p, double tol) {
  require_p(p, "check_caratheodory_bound");
  std::vector<GapReport> reports;
  reports.reserve(static_cast<std::size_t>(p.order()));
  for (int j = 1; j <= p.order(); ++j) {
    reports.push_back(
        make_report("caratheodory_bound", j, 0, std::abs(p[j]), 2.0, tol));
  }
  return reports;
}

double min_real_part(const TruncatedSeries& p, double radius, int grid) {
  if (grid < 8) {
    throw std::invalid_argument("min_real_part: grid must be at least 8");
  }
  return min_real_on_polar_grid(p, radius, grid / 4, grid);
}

double min_real_part_serial(const TruncatedSeries& p, double radius, int grid) {
  if (grid < 8) {
    throw std::invalid_argument("min_real_part: grid must be at least 8");
  }
  return min_real_on_polar_grid_serial(p, radius, grid / 4, grid);
}

}  // namespace sncoeff

#include "sncoeff/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sncoeff {

namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_order(int order) {
  if (order < 1) {
    throw std::invalid_argument("TruncatedSeries: order must be >= 1, got " +
                                std::to_string(order));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  require_order(order);
  coeffs_.assign(static_cast<size_t>(order) + 1, Complex{0.0, 0.0});
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Complex> coeffs) {
  require_order(order);
  if (coeffs.size() != static_cast<size_t>(order) + 1) {
    throw std::invalid_argument("TruncatedSeries: expected " + std::to_string(order + 1) +
                                " coefficients, got " + std::to_string(coeffs.size()));
  }
  for (const Complex& c : coeffs) {
    if (!finite(c)) throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
  }
  coeffs_ = std::move(coeffs);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1.0;
  return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  TruncatedSeries s(order);
  s.coeffs_[1] = 1.0;
  return s;
}

void TruncatedSeries::set(int k, Complex value) {
  if (k < 0 || k > order()) {
    throw std::out_of_range("TruncatedSeries::set: index " + std::to_string(k) +
                            " outside order " + std::to_string(order()));
  }
  if (!finite(value)) throw std::invalid_argument("TruncatedSeries::set: non-finite value");
  coeffs_[static_cast<size_t>(k)] = value;
}

UnitModulus::UnitModulus(Complex value) : value_(value) {
  if (std::abs(std::abs(value) - 1.0) > kUnitModulusTol) {
    throw std::invalid_argument("UnitModulus: |value| must be 1 within 1e-12");
  }
}

UnitModulus UnitModulus::from_angle(double radians) noexcept {
  UnitModulus u{};
  u.value_ = std::polar(1.0, radians);
  return u;
}

double UnitModulus::angle() const noexcept {
  double a = std::arg(value_);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  return a;
}

bool is_normalized(const TruncatedSeries& f, double tol) {
  return std::abs(f[0]) <= tol && std::abs(f[1] - 1.0) <= tol;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::max(f.order(), g.order());
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) {
    Complex v = 0.0;
    if (k <= f.order()) v += f[k];
    if (k <= g.order()) v += g[k];
    out.set(k, v);
  }
  return out;
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::max(f.order(), g.order());
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) {
    Complex acc = 0.0;
    const int lo = std::max(0, k - g.order());
    const int hi = std::min(k, f.order());
    for (int i = lo; i <= hi; ++i) acc += f[i] * g[k - i];
    out.set(k, acc);
  }
  return out;
}

TruncatedSeries exp_series(const TruncatedSeries& phi) {
  if (std::abs(phi[0]) > kNormalizationTol) {
    throw std::invalid_argument("exp_series: input must have zero constant term");
  }
  const int n = phi.order();
  TruncatedSeries beta(n);
  beta.set(0, 1.0);
  for (int k = 1; k <= n; ++k) {
    Complex acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * phi[j] * beta[k - j];
    beta.set(k, acc / static_cast<double>(k));
  }
  return beta;
}

TruncatedSeries log_series(const TruncatedSeries& f) {
  if (std::abs(f[0] - 1.0) > kNormalizationTol) {
    throw std::invalid_argument("log_series: input must have constant term 1");
  }
  const int n = f.order();
  TruncatedSeries lam(n);
  for (int k = 1; k <= n; ++k) {
    Complex acc = 0.0;
    for (int j = 1; j <= k - 1; ++j) acc += static_cast<double>(j) * lam[j] * f[k - j];
    lam.set(k, f[k] - acc / static_cast<double>(k));
  }
  return lam;
}

TruncatedSeries geometric(Complex eta, int order) {
  if (std::abs(eta) > 1.0 + kUnitModulusTol) {
    throw std::invalid_argument("geometric: |eta| must be <= 1");
  }
  TruncatedSeries out(order);
  Complex p = 1.0;
  out.set(0, p);
  for (int k = 1; k <= order; ++k) {
    p *= eta;
    out.set(k, p);
  }
  return out;
}

Complex evaluate(const TruncatedSeries& f, Complex z) {
  Complex acc = f[f.order()];
  for (int k = f.order() - 1; k >= 0; --k) acc = acc * z + f[k];
  return acc;
}

TruncatedSeries shift_scale(const TruncatedSeries& f, UnitModulus omega) {
  if (!is_normalized(f)) {
    throw std::invalid_argument("shift_scale: input must be normalized (c0=0, c1=1)");
  }
  TruncatedSeries out(f.order());
  Complex w = 1.0;  // omega^{k-1}
  for (int k = 1; k <= f.order(); ++k) {
    out.set(k, w * f[k]);
    w *= omega.value();
  }
  return out;
}

TruncatedSeries resized(const TruncatedSeries& f, int order) {
  require_order(order);
  TruncatedSeries out(order);
  const int top = std::min(order, f.order());
  for (int k = 0; k <= top; ++k) out.set(k, f[k]);
  return out;
}

TruncatedSeries derivative(const TruncatedSeries& f) {
  if (f.order() < 2) throw std::invalid_argument("derivative: order must be >= 2");
  TruncatedSeries out(f.order() - 1);
  for (int k = 0; k < f.order(); ++k) out.set(k, static_cast<double>(k + 1) * f[k + 1]);
  return out;
}

TruncatedSeries times_z(const TruncatedSeries& f) {
  TruncatedSeries out(f.order() + 1);
  for (int k = 0; k <= f.order(); ++k) out.set(k + 1, f[k]);
  return out;
}

TruncatedSeries divided_by_z(const TruncatedSeries& f) {
  if (f.order() < 2) throw std::invalid_argument("divided_by_z: order must be >= 2");
  if (std::abs(f[0]) > kNormalizationTol) {
    throw std::invalid_argument("divided_by_z: constant term must be 0");
  }
  TruncatedSeries out(f.order() - 1);
  for (int k = 1; k <= f.order(); ++k) out.set(k - 1, f[k]);
  return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& f) {
  TruncatedSeries neg_log = log_series(f);
  for (int k = 0; k <= neg_log.order(); ++k) neg_log.set(k, -neg_log[k]);
  return exp_series(neg_log);
}

TruncatedSeries divide(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::max(f.order(), g.order());
  return mul(resized(f, n), reciprocal(resized(g, n)));
}

}  // namespace sncoeff

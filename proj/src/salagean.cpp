#include "sncoeff/salagean.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sncoeff {

SalageanOrder::SalageanOrder(int value) : value_(value) {
  if (value < 0) {
    throw std::invalid_argument("SalageanOrder: order must be non-negative, got " +
                                std::to_string(value));
  }
}

double ipow(double base, int exp) {
  if (exp < 0) {
    throw std::invalid_argument("ipow: exponent must be non-negative, got " +
                                std::to_string(exp));
  }
  double result = 1.0;
  for (int i = 0; i < exp; ++i) {
    result *= base;
  }
  return result;
}

namespace {

void require_normalized(const TruncatedSeries& f, const char* op) {
  if (!is_normalized(f)) {
    throw std::invalid_argument(std::string(op) +
                                ": series must be normalized (a_0 = 0, a_1 = 1)");
  }
}

}  // namespace

TruncatedSeries apply_D(const TruncatedSeries& f, SalageanOrder n) {
  require_normalized(f, "apply_D");
  std::vector<Complex> c(f.coeffs());
  for (int k = 2; k <= f.order(); ++k) {
    c[k] *= ipow(static_cast<double>(k), n.value());
  }
  return TruncatedSeries(f.order(), std::move(c));
}

TruncatedSeries apply_I(const TruncatedSeries& f, SalageanOrder n) {
  require_normalized(f, "apply_I");
  std::vector<Complex> c(f.coeffs());
  for (int k = 2; k <= f.order(); ++k) {
    c[k] /= ipow(static_cast<double>(k), n.value());
  }
  return TruncatedSeries(f.order(), std::move(c));
}

}  // namespace sncoeff

#pragma once

#include "sncoeff/series.hpp"

namespace sncoeff {

// Non-negative order for the Salagean differential and integral operators.
// Implicit construction from int so call sites can write apply_D(f, 2).
class SalageanOrder {
 public:
  SalageanOrder(int value);  // NOLINT(google-explicit-constructor)

  int value() const { return value_; }

 private:
  int value_;
};

// base^exp by repeated multiplication, exp >= 0. Deterministic across
// platforms, unlike std::pow which may use different libm paths.
double ipow(double base, int exp);

// D^n f: a_k -> k^n a_k. Requires a normalized series (a_0 = 0, a_1 = 1).
TruncatedSeries apply_D(const TruncatedSeries& f, SalageanOrder n);

// I_n f: a_k -> a_k / k^n. Inverse of apply_D on normalized series.
TruncatedSeries apply_I(const TruncatedSeries& f, SalageanOrder n);

}  // namespace sncoeff

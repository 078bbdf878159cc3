#pragma once

#include <complex>
#include <vector>

// Arithmetic on truncated complex power series. A TruncatedSeries holds the
// coefficients c_0..c_N of an analytic function modulo z^{N+1}; every other
// component of the library computes on this substrate. All operations are
// pure: they never mutate their inputs and hold no global state, so values
// are safe to share between threads once constructed.

namespace sncoeff {

using Complex = std::complex<double>;

inline constexpr double kNormalizationTol = 1e-12;
inline constexpr double kUnitModulusTol = 1e-12;

/// Coefficients c_0..c_N of a power series truncated at z^N, N >= 1.
/// Construction rejects non-finite coefficients and orders below 1.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<Complex> coeffs);

  static TruncatedSeries one(int order);       // constant 1
  static TruncatedSeries identity(int order);  // the series z

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  Complex operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }

  /// Bounds-checked write; rejects non-finite values.
  void set(int k, Complex value);

 private:
  std::vector<Complex> coeffs_;
};

/// A complex number constrained to the unit circle (within kUnitModulusTol).
class UnitModulus {
 public:
  explicit UnitModulus(Complex value);
  static UnitModulus from_angle(double radians) noexcept;
  Complex value() const noexcept { return value_; }
  /// Argument in [0, 2*pi).
  double angle() const noexcept;

 private:
  UnitModulus() = default;
  Complex value_;
};

/// True when c_0 = 0 and c_1 = 1 within tol (the normalization f(0)=0, f'(0)=1).
bool is_normalized(const TruncatedSeries& f, double tol = kNormalizationTol);

/// Coefficientwise sum; the shorter input is zero-padded to the longer order.
TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);

/// Cauchy product truncated at the longer input order; powers above it are
/// discarded (truncation is the semantic of the type, not an error).
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Exponentiated power series: beta with exp(phi) = sum beta_k z^k, beta_0 = 1,
/// via the recurrence beta_k = (1/k) * sum_{j=1..k} j*phi_j*beta_{k-j}.
/// Requires phi(0) = 0; throws std::invalid_argument otherwise.
TruncatedSeries exp_series(const TruncatedSeries& phi);

/// Inverse of exp_series: phi with phi(0) = 0 and exp_series(phi) = f to
/// working precision. Requires f(0) = 1; throws std::invalid_argument otherwise.
TruncatedSeries log_series(const TruncatedSeries& f);

/// The geometric series 1/(1 - eta*z): coefficients eta^k. Requires |eta| <= 1.
TruncatedSeries geometric(Complex eta, int order);

/// Horner evaluation of the truncated polynomial at z. Truncation error grows
/// with |z|; callers should stay well inside the unit disk.
Complex evaluate(const TruncatedSeries& f, Complex z);

/// Rotation conjugation: a_k -> omega^{k-1} a_k, the series of
/// conj(omega)*f(omega*z). Requires f normalized; the result stays normalized
/// and |a_k| is invariant.
TruncatedSeries shift_scale(const TruncatedSeries& f, UnitModulus omega);

// -- plumbing used throughout ------------------------------------------------

/// Truncate or zero-pad to the given order (>= 1).
TruncatedSeries resized(const TruncatedSeries& f, int order);

/// d/dz; result has order f.order()-1, so f.order() >= 2 is required.
TruncatedSeries derivative(const TruncatedSeries& f);

/// Multiply by z; result has order f.order()+1 (lossless).
TruncatedSeries times_z(const TruncatedSeries& f);

/// Divide by z. Requires c_0 = 0 and order >= 2; result has order f.order()-1.
TruncatedSeries divided_by_z(const TruncatedSeries& f);

/// Multiplicative inverse exp(-log f) of a series with f(0) = 1.
TruncatedSeries reciprocal(const TruncatedSeries& f);

/// f/g for g(0) = 1, computed as mul(f, reciprocal(g)) at the longer order.
TruncatedSeries divide(const TruncatedSeries& f, const TruncatedSeries& g);

}  // namespace sncoeff

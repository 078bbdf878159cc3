#pragma once

#include <vector>

#include "sncoeff/circle_min.hpp"
#include "sncoeff/report.hpp"
#include "sncoeff/salagean.hpp"
#include "sncoeff/series.hpp"

namespace sncoeff {

// Coefficient-size checks carry a slightly wider net than identities but a
// tighter one than the generic slack: the quantities are exact rationals in
// exact arithmetic, so anything beyond accumulated rounding is a real failure.
inline constexpr double kCoeffBoundTol = 1e-8;
// Exponentiated-series bound comparisons involve exp of an accumulated sum.
inline constexpr double kExpBoundTol = 1e-9;

// |(k+1)^n a_{k+1} - nu k^n a_k|, the successive-coefficient gap.
// Requires f normalized and 1 <= k <= order-1.
double successive_gap(const TruncatedSeries& f, SalageanOrder n, int k,
                      UnitModulus nu);

// Minimum of the gap over unimodular nu (grid scan plus local refinement).
// For members of the class the minimum is at most 1: the theorem guarantees a
// witness nu exists, not that every nu works (the Koebe function at nu = -1
// already breaks the universal reading).
CircleMin min_gap_over_circle(const TruncatedSeries& f, SalageanOrder n, int k,
                              int grid);
CircleMin min_gap_over_circle_serial(const TruncatedSeries& f, SalageanOrder n,
                                     int k, int grid);

// |(k+1)^n |a_{k+1}| - k^n |a_k|| <= 1; follows from the gap bound by the
// triangle inequality, so it holds at whatever nu attains the minimum.
GapReport modulus_gap(const TruncatedSeries& f, SalageanOrder n, int k,
                      double tol = kSlackTol);

// |a_k| <= k^{1-n} for k >= 2, one report per index up to f.order().
std::vector<GapReport> coeff_bound(const TruncatedSeries& f, SalageanOrder n,
                                   double tol = kCoeffBoundTol);

// Odd functions: |a_{2k+1}| <= (2k+1)^{-n}, reports for odd indices >= 3.
// Rejects input whose even coefficients are not zero within kNormalizationTol.
std::vector<GapReport> odd_coeff_bound(const TruncatedSeries& f, SalageanOrder n,
                                       double tol = kCoeffBoundTol);

// Exponentiated-series coefficient bound, beta = exp_series(phi):
//   check:         |beta_k|  <= exp(sum_{j<=k} (j |lambda_j|^2 - 1/j))
//   check_squared: |beta_k|^2 <= same right side.
// The unsquared form is how the source lemma is usually quoted alongside
// these classes, but it is false for general phi (lambda_1 = 0.9 already
// breaks it at k = 1); the squared form is the classical third Lebedev-Milin
// inequality and is the one that gates verification. Both are exposed so the
// discrepancy stays measurable instead of silently patched.
GapReport lebedev_milin_check(const TruncatedSeries& phi, int k,
                              double tol = kExpBoundTol);
GapReport lebedev_milin_check_squared(const TruncatedSeries& phi, int k,
                                      double tol = kExpBoundTol);

// H_k = sum_{j=1..k} 1/j, accumulated in ascending j.
double harmonic_number(int k);

struct LeungResult {
  UnitModulus nu;
  double achieved;
  double harmonic_bound;
};

// Minimizes sum_{j=1..k} (1/j) |p_j - nu^j|^2 over unimodular nu. For p with
// positive real part the minimum is at most H_k; the minimizing nu is the
// witness the successive-gap theorem needs.
LeungResult leung_nu_search(const TruncatedSeries& p, int k, int grid);
LeungResult leung_nu_search_serial(const TruncatedSeries& p, int k, int grid);

// | k|a_k| - m|a_m| | <= |k^2 - m^2| for close-to-convex f. k = m is rejected:
// the bound degenerates to 0 and would only pad pass statistics.
GapReport robertson_gap(const TruncatedSeries& f, int k, int m,
                        double tol = kSlackTol);

// | (k+1)|a_{k+1}| - k|a_k| | <= 2k+1, the induction step behind the pair
// bound.
GapReport robertson_step(const TruncatedSeries& f, int k, double tol = kSlackTol);

// Residual of the telescoped convolution identity
//   (k+1) a_{k+1} - k a_k = c_k - c_{k-1},   c = coefficients of g' p,
// for f = close_to_convex(g, p). Zero up to rounding by construction.
double convolution_identity(const TruncatedSeries& f, const TruncatedSeries& g,
                            const TruncatedSeries& p, int k);

}  // namespace sncoeff

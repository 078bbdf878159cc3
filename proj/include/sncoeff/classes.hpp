#pragma once

#include "sncoeff/salagean.hpp"
#include "sncoeff/series.hpp"

namespace sncoeff {

// Substitute z^2 for z: coefficient c_j moves to index 2j, odd indices are
// exactly zero. Used to manufacture odd functions.
TruncatedSeries substitute_z_squared(const TruncatedSeries& q, int order);

// Member of the class with Re(D^{n+1}f / D^n f) > 0, built from a positive
// real part series p with p(0) = 1:
//   f = I_n( z * exp(sum_{j>=1} (p_j / j) z^j) ).
// The construction inverts the logarithmic derivative relation, so membership
// holds by construction up to truncation.
TruncatedSeries member_from_p(const TruncatedSeries& p, SalageanOrder n, int order);

// The extremal family I_n( z / ((1 - nu z)(1 - gamma z)) ), built by
// multiplying the two geometric factors (the closed-form divided difference
// would need a special branch at nu = gamma; the product form does not).
// Coefficients satisfy (k+1)^n a_{k+1} - nu k^n a_k = gamma^k.
TruncatedSeries extremal(SalageanOrder n, UnitModulus nu, UnitModulus gamma, int order);

// Odd member: p(z) = q(z^2) keeps positive real part, and the resulting
// member_from_p output has exactly zero even coefficients.
TruncatedSeries odd_member_from_q(const TruncatedSeries& q, SalageanOrder n, int order);

// f' = g' * p solved coefficientwise: (k+1) a_{k+1} = c_k where
// c = coefficients of g'(z) p(z). g must be normalized (a convex member is
// the intended input); p(0) must be 1.
TruncatedSeries close_to_convex(const TruncatedSeries& g, const TruncatedSeries& p,
                                int order);

// The positive-real-part series recovered from f: D^{n+1}f / D^n f computed
// as a quotient of series (both divided by z first, so the constant terms
// are 1). For f = member_from_p(p, ...) this reproduces p up to truncation.
TruncatedSeries ratio_to_caratheodory(const TruncatedSeries& f, SalageanOrder n);

// Minimum of Re(D^{n+1}f / D^n f) over the polar grid with grid/4 rings and
// grid spokes at the given radius. The quotient is expanded as a series first:
// its coefficients stay O(1), so truncation at the scan radius costs little,
// whereas dividing two pointwise-evaluated truncations loses everything to
// their tails. D^n f is still evaluated at every grid point; an exact zero
// there throws std::domain_error naming the point.
double verify_membership(const TruncatedSeries& f, SalageanOrder n, double radius,
                         int grid);
double verify_membership_serial(const TruncatedSeries& f, SalageanOrder n,
                                double radius, int grid);

}  // namespace sncoeff

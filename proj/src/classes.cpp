#include "sncoeff/classes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sncoeff/grid_scan.hpp"

namespace sncoeff {

namespace {

void require_p(const TruncatedSeries& p, const char* op) {
  if (std::abs(p[0] - Complex(1.0, 0.0)) > kNormalizationTol) {
    throw std::invalid_argument(std::string(op) + ": constant term of p must be 1");
  }
}

void require_order_at_least(int order, int min, const char* op) {
  if (order < min) {
    throw std::invalid_argument(std::string(op) + ": order must be at least " +
                                std::to_string(min));
  }
}

}  // namespace

TruncatedSeries substitute_z_squared(const TruncatedSeries& q, int order) {
  require_order_at_least(order, 1, "substitute_z_squared");
  TruncatedSeries out(order);
  for (int j = 0; 2 * j <= order && j <= q.order(); ++j) {
    out.set(2 * j, q[j]);
  }
  return out;
}

TruncatedSeries member_from_p(const TruncatedSeries& p, SalageanOrder n, int order) {
  require_p(p, "member_from_p");
  require_order_at_least(order, 2, "member_from_p");
  TruncatedSeries phi(order - 1);
  for (int j = 1; j <= order - 1; ++j) {
    phi.set(j, (j <= p.order() ? p[j] : Complex(0.0, 0.0)) /
                   static_cast<double>(j));
  }
  return apply_I(times_z(exp_series(phi)), n);
}

TruncatedSeries extremal(SalageanOrder n, UnitModulus nu, UnitModulus gamma,
                         int order) {
  require_order_at_least(order, 2, "extremal");
  TruncatedSeries product =
      mul(geometric(nu.value(), order - 1), geometric(gamma.value(), order - 1));
  return apply_I(times_z(product), n);
}

TruncatedSeries odd_member_from_q(const TruncatedSeries& q, SalageanOrder n,
                                  int order) {
  require_p(q, "odd_member_from_q");
  return member_from_p(substitute_z_squared(q, order), n, order);
}

TruncatedSeries close_to_convex(const TruncatedSeries& g, const TruncatedSeries& p,
                                int order) {
  if (!is_normalized(g)) {
    throw std::invalid_argument("close_to_convex: g must be normalized");
  }
  require_p(p, "close_to_convex");
  require_order_at_least(order, 2, "close_to_convex");
  TruncatedSeries c = mul(derivative(resized(g, order)), resized(p, order - 1));
  TruncatedSeries f(order);
  f.set(1, Complex(1.0, 0.0));
  for (int k = 1; k <= order - 1; ++k) {
    f.set(k + 1, c[k] / static_cast<double>(k + 1));
  }
  return f;
}

TruncatedSeries ratio_to_caratheodory(const TruncatedSeries& f, SalageanOrder n) {
  if (f.order() < 2) {
    throw std::invalid_argument("ratio_to_caratheodory: order must be at least 2");
  }
  TruncatedSeries num = divided_by_z(apply_D(f, n.value() + 1));
  TruncatedSeries den = divided_by_z(apply_D(f, n));
  return divide(num, den);
}

namespace {

double membership_scan(const TruncatedSeries& f, SalageanOrder n, double radius,
                       int grid, bool parallel) {
  if (grid < 8) {
    throw std::invalid_argument("verify_membership: grid must be at least 8");
  }
  TruncatedSeries ratio = ratio_to_caratheodory(f, n);
  TruncatedSeries den = divided_by_z(apply_D(f, n));
  return parallel
             ? min_real_guarded(ratio, den, radius, grid / 4, grid)
             : min_real_guarded_serial(ratio, den, radius, grid / 4, grid);
}

}  // namespace

double verify_membership(const TruncatedSeries& f, SalageanOrder n, double radius,
                         int grid) {
  return membership_scan(f, n, radius, grid, true);
}

double verify_membership_serial(const TruncatedSeries& f, SalageanOrder n,
                                double radius, int grid) {
  return membership_scan(f, n, radius, grid, false);
}

}  // namespace sncoeff

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oracles.hpp"
#include "sncoeff/caratheodory.hpp"
#include "sncoeff/classes.hpp"

using sncoeff::Complex;
using sncoeff::HerglotzMeasure;
using sncoeff::TruncatedSeries;
using sncoeff::UnitModulus;

namespace {

TruncatedSeries atom_p(double angle, int order) {
  return p_from_measure(HerglotzMeasure({angle}, {1.0}), order);
}

const UnitModulus kOne = UnitModulus::from_angle(0.0);
const UnitModulus kMinusOne{Complex(-1.0, 0.0)};

}  // namespace

TEST_CASE("member_from_p reproduces the Koebe function at n = 0") {
  const TruncatedSeries f = sncoeff::member_from_p(atom_p(0.0, 12), 0, 12);
  CHECK(sncoeff::is_normalized(f));
  for (int k = 1; k <= 10; ++k) {
    CHECK(std::abs(f[k] - Complex(static_cast<double>(k), 0.0)) < 1e-12);
  }
}

TEST_CASE("member_from_p with p = 1 returns z") {
  const TruncatedSeries f = sncoeff::member_from_p(TruncatedSeries::one(8), 2, 8);
  CHECK(f[1] == Complex(1.0, 0.0));
  for (int k = 2; k <= 8; ++k) {
    CHECK(std::abs(f[k]) == 0.0);
  }
}

TEST_CASE("member_from_p at n = 1 integrates the Koebe image to z/(1-z)") {
  const TruncatedSeries f = sncoeff::member_from_p(atom_p(0.0, 12), 1, 12);
  for (int k = 1; k <= 12; ++k) {
    CHECK(std::abs(f[k] - Complex(1.0, 0.0)) < 1e-12);
  }
  CHECK_THROWS_AS(sncoeff::member_from_p(TruncatedSeries::identity(6), 0, 6),
                  std::invalid_argument);
}

TEST_CASE("member coefficients match an independent expansion") {
  // Single atom at angle 1, n = 2: values from a high-precision evaluation of
  // the recurrence behind I_2(z exp(sum 2 e^{ij}/j z^j)).
  const TruncatedSeries f = sncoeff::member_from_p(atom_p(1.0, 8), 2, 8);
  CHECK(std::abs(f[2] - Complex(0.27015115293406986, 0.42073549240394825)) < 1e-14);
  CHECK(std::abs(f[3] - Complex(-0.1387156121823808, 0.30309914227522723)) < 1e-14);
  CHECK(std::abs(f[4] - Complex(-0.24749812415011136, 0.035280002014966806)) < 1e-14);
  CHECK(std::abs(f[5] - Complex(-0.13072872417272238, -0.15136049906158565)) < 1e-14);
}

TEST_CASE("extremal family") {
  const TruncatedSeries koebe = sncoeff::extremal(0, kOne, kOne, 12);
  CHECK(oracles::max_coeff_diff(koebe, oracles::koebe(12)) == 0.0);

  const TruncatedSeries odd = sncoeff::extremal(1, kOne, kMinusOne, 12);
  for (int k = 1; k <= 12; ++k) {
    if (k % 2 == 1) {
      CHECK(std::abs(odd[k] - Complex(1.0 / k, 0.0)) == 0.0);
    } else {
      CHECK(std::abs(odd[k]) == 0.0);
    }
  }
}

TEST_CASE("extremal recurrence holds for generic parameters") {
  for (int n = 0; n <= 3; ++n) {
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) {
        const UnitModulus nu = UnitModulus::from_angle(2 * std::numbers::pi * a / 6);
        const UnitModulus gamma =
            UnitModulus::from_angle(2 * std::numbers::pi * b / 6 + 0.1);
        const TruncatedSeries f = sncoeff::extremal(n, nu, gamma, 24);
        Complex gamma_pow(1.0, 0.0);
        for (int k = 1; k <= 23; ++k) {
          gamma_pow *= gamma.value();
          const Complex lhs =
              sncoeff::ipow(k + 1.0, n) * f[k + 1] - nu.value() * (sncoeff::ipow(static_cast<double>(k), n) * f[k]);
          CHECK(std::abs(lhs - gamma_pow) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("odd members") {
  const TruncatedSeries f = sncoeff::odd_member_from_q(atom_p(0.0, 12), 0, 12);
  for (int k = 1; k <= 12; k += 2) {
    CHECK(std::abs(f[k] - Complex(1.0, 0.0)) < 1e-12);  // z/(1-z^2)
  }
  for (int k = 2; k <= 12; k += 2) {
    CHECK(std::abs(f[k]) == 0.0);  // exactly zero by the recurrence parity
  }

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const TruncatedSeries q =
        p_from_measure(sncoeff::random_measure(seed, sncoeff::kMaxAtoms), 16);
    const TruncatedSeries g = sncoeff::odd_member_from_q(q, 2, 16);
    for (int k = 2; k <= 16; k += 2) {
      CHECK(std::abs(g[k]) == 0.0);
    }
  }

  const TruncatedSeries z_only = sncoeff::odd_member_from_q(TruncatedSeries::one(8), 1, 8);
  for (int k = 2; k <= 8; ++k) {
    CHECK(std::abs(z_only[k]) == 0.0);
  }
}

TEST_CASE("close_to_convex on closed forms") {
  // g = z/(1-z) (convex), p = (1+z)/(1-z): f' = (1+z)/(1-z)^3, the Koebe
  // derivative, so f is the Koebe function.
  const TruncatedSeries g = sncoeff::extremal(1, kOne, kOne, 12);
  const TruncatedSeries f = sncoeff::close_to_convex(g, atom_p(0.0, 12), 12);
  for (int k = 1; k <= 10; ++k) {
    CHECK(std::abs(f[k] - Complex(static_cast<double>(k), 0.0)) < 1e-12);
  }

  // p = 1 leaves g unchanged.
  const TruncatedSeries same = sncoeff::close_to_convex(g, TruncatedSeries::one(12), 12);
  CHECK(oracles::max_coeff_diff(same, g) < 1e-14);

  // g = z: (k+1) a_{k+1} = p_k.
  const TruncatedSeries p = atom_p(0.7, 12);
  const TruncatedSeries h =
      sncoeff::close_to_convex(TruncatedSeries::identity(12), p, 12);
  for (int k = 1; k <= 11; ++k) {
    CHECK(std::abs(h[k + 1] - p[k] / static_cast<double>(k + 1)) == 0.0);
  }

  CHECK_THROWS_AS(sncoeff::close_to_convex(TruncatedSeries::one(8), p, 8),
                  std::invalid_argument);
}

TEST_CASE("ratio_to_caratheodory inverts member_from_p") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const TruncatedSeries p =
        p_from_measure(sncoeff::random_measure(seed, sncoeff::kMaxAtoms), 32);
    for (int n = 0; n <= 3; ++n) {
      const TruncatedSeries f = sncoeff::member_from_p(p, n, 32);
      const TruncatedSeries back = sncoeff::ratio_to_caratheodory(f, n);
      double worst = 0.0;
      for (int j = 0; j <= 30; ++j) {
        worst = std::max(worst, std::abs(back[j] - p[j]));
      }
      CHECK(worst < 1e-8);
    }
  }
}

TEST_CASE("verify_membership") {
  // f = z: the ratio is identically 1.
  CHECK(sncoeff::verify_membership(TruncatedSeries::identity(8), 2, 0.9, 64) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Members stay essentially positive at the scan radius.
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const TruncatedSeries p =
        p_from_measure(sncoeff::random_measure(seed, sncoeff::kMaxAtoms), 48);
    for (int n = 0; n <= 3; ++n) {
      const TruncatedSeries f = sncoeff::member_from_p(p, n, 48);
      CHECK(sncoeff::verify_membership(f, n, 0.9, 256) > -1e-3);
    }
  }

  // The Koebe function is starlike: the n = 0 ratio keeps positive real part.
  const TruncatedSeries koebe = sncoeff::member_from_p(atom_p(0.0, 48), 0, 48);
  CHECK(sncoeff::verify_membership(koebe, 0, 0.9, 256) > 0.0);

  // Serial and parallel agree bitwise.
  const TruncatedSeries p =
      p_from_measure(sncoeff::random_measure(77, sncoeff::kMaxAtoms), 32);
  const TruncatedSeries f = sncoeff::member_from_p(p, 1, 32);
  CHECK(sncoeff::verify_membership(f, 1, 0.9, 128) ==
        sncoeff::verify_membership_serial(f, 1, 0.9, 128));
}

TEST_CASE("substitute_z_squared") {
  TruncatedSeries q(3, {1.0, 2.0, 3.0, 4.0});
  const TruncatedSeries s = sncoeff::substitute_z_squared(q, 7);
  CHECK(s[0] == Complex(1.0, 0.0));
  CHECK(s[2] == Complex(2.0, 0.0));
  CHECK(s[4] == Complex(3.0, 0.0));
  CHECK(s[6] == Complex(4.0, 0.0));
  CHECK(s[1] == Complex(0.0, 0.0));
  CHECK(s[7] == Complex(0.0, 0.0));
}

#include "sncoeff/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "sncoeff/caratheodory.hpp"
#include "sncoeff/classes.hpp"
#include "sncoeff/inequalities.hpp"
#include "sncoeff/rng.hpp"

namespace sncoeff {

namespace {

constexpr int kExtremalRootCount = 16;
constexpr int kExtremalMaxK = 20;
constexpr int kUnitChunk = 16;

struct UnitOutput {
  std::vector<SweepRow> rows;
  long long unsquared_exceedances = 0;
};

// Runs `count` independent units, emitting their rows in unit order no matter
// how the chunked parallel loop schedules them. The sink runs on the calling
// thread only.
template <typename MakeUnit>
void run_units(int count, bool parallel, const RowSink& sink, SweepSummary& summary,
               const MakeUnit& make_unit) {
  std::vector<UnitOutput> block;
  for (int base = 0; base < count; base += kUnitChunk) {
    const int size = std::min(kUnitChunk, count - base);
    block.assign(static_cast<std::size_t>(size), UnitOutput{});
    if (parallel) {
      std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < size; ++i) {
        try {
          block[static_cast<std::size_t>(i)] = make_unit(base + i);
        } catch (...) {
#pragma omp critical(sweep_unit_error)
          {
            if (!error) {
              error = std::current_exception();
            }
          }
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
    } else {
      for (int i = 0; i < size; ++i) {
        block[static_cast<std::size_t>(i)] = make_unit(base + i);
      }
    }
    for (const UnitOutput& unit : block) {
      summary.unsquared_exp_bound_exceedances += unit.unsquared_exceedances;
      for (const SweepRow& row : unit.rows) {
        summary.rows += 1;
        if (!row.report.pass) {
          summary.failures += 1;
        }
        sink(row);
      }
    }
  }
}

void push(UnitOutput& out, GapReport report, std::optional<int> n,
          std::optional<std::uint64_t> sample_seed) {
  out.rows.push_back(SweepRow{std::move(report), n, sample_seed});
}

// One extremal-family unit: a fixed (n, nu, gamma) triple, checked for
// sharpness (the gap at the defining nu equals 1) and for the coefficient
// recurrence (k+1)^n a_{k+1} - nu k^n a_k = gamma^k.
UnitOutput extremal_unit(const RunConfig& config, int index) {
  const int per_n = kExtremalRootCount * kExtremalRootCount;
  const int n = config.n_values[static_cast<std::size_t>(index / per_n)];
  const int a = (index % per_n) / kExtremalRootCount;
  const int b = index % kExtremalRootCount;
  const double two_pi = 2.0 * std::numbers::pi;
  const UnitModulus nu = UnitModulus::from_angle(two_pi * a / kExtremalRootCount);
  const UnitModulus gamma = UnitModulus::from_angle(two_pi * b / kExtremalRootCount);
  const TruncatedSeries f = extremal(n, nu, gamma, config.order);

  UnitOutput out;
  const int top_k = std::min(kExtremalMaxK, config.order - 1);
  out.rows.reserve(static_cast<std::size_t>(2 * top_k));
  Complex gamma_power(1.0, 0.0);
  for (int k = 1; k <= top_k; ++k) {
    gamma_power *= gamma.value();
    const double gap = successive_gap(f, n, k, nu);
    push(out,
         make_report("extremal_sharpness", k, 0, std::abs(gap - 1.0), 0.0,
                     config.tolerance_identity, nu.value()),
         n, std::nullopt);
    const Complex lhs = ipow(static_cast<double>(k + 1), n) * f[k + 1] -
                        nu.value() * (ipow(static_cast<double>(k), n) * f[k]);
    push(out,
         make_report("extremal_recurrence", k, 0, std::abs(lhs - gamma_power), 0.0,
                     config.tolerance_identity, gamma.value()),
         n, std::nullopt);
  }
  return out;
}

TruncatedSeries random_phi(std::uint64_t seed, int order) {
  Rng rng(seed);
  TruncatedSeries phi(order);
  for (int j = 1; j <= order; ++j) {
    const double modulus = rng.uniform();
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    phi.set(j, std::polar(modulus, angle));
  }
  return phi;
}

GapReport positivity_report(std::string label, double min_re) {
  return make_report(std::move(label), 0, 0, -min_re, kMembershipTol, 0.0);
}

UnitOutput sample_unit(const RunConfig& config, int index, bool parallel) {
  const std::uint64_t sample_seed =
      split_seed(config.seed, static_cast<std::uint64_t>(index));
  UnitOutput out;
  out.rows.reserve(400);

  const HerglotzMeasure mu =
      random_measure(split_seed(sample_seed, kMeasureStream), kMaxAtoms);
  const TruncatedSeries p = p_from_measure(mu, config.order);
  const TruncatedSeries p_scan = p_from_measure(mu, kScanOrder);

  for (GapReport& report :
       check_caratheodory_bound(resized(p, config.max_k), config.tolerance_slack)) {
    push(out, std::move(report), std::nullopt, sample_seed);
  }

  const double p_min_re = parallel
                              ? min_real_part(p_scan, kScanRadius, kScanGrid)
                              : min_real_part_serial(p_scan, kScanRadius, kScanGrid);
  push(out, positivity_report("caratheodory_min_re", p_min_re), std::nullopt,
       sample_seed);

  for (int k = 1; k <= config.max_k; ++k) {
    const LeungResult leung = parallel
                                  ? leung_nu_search(p, k, config.grid)
                                  : leung_nu_search_serial(p, k, config.grid);
    push(out,
         make_report("leung_sum", k, 0, leung.achieved, leung.harmonic_bound,
                     config.tolerance_slack, leung.nu.value()),
         std::nullopt, sample_seed);
  }

  const TruncatedSeries phi =
      random_phi(split_seed(sample_seed, kPhiStream), config.max_k);
  for (int k = 1; k <= config.max_k; ++k) {
    GapReport squared = lebedev_milin_check_squared(phi, k);
    push(out, std::move(squared), std::nullopt, sample_seed);
    if (!lebedev_milin_check(phi, k).pass) {
      out.unsquared_exceedances += 1;
    }
  }

  const HerglotzMeasure odd_mu =
      random_measure(split_seed(sample_seed, kOddStream), kMaxAtoms);
  const TruncatedSeries q = p_from_measure(odd_mu, config.order);
  const TruncatedSeries q_scan = p_from_measure(odd_mu, kScanOrder);

  for (int n : config.n_values) {
    const TruncatedSeries f = member_from_p(p, n, config.order);
    for (int k = 1; k <= config.max_k; ++k) {
      const CircleMin gap_min = parallel
                                    ? min_gap_over_circle(f, n, k, config.grid)
                                    : min_gap_over_circle_serial(f, n, k, config.grid);
      push(out,
           make_report("successive_gap_min", k, 0, gap_min.value, 1.0,
                       config.tolerance_slack, gap_min.arg.value()),
           n, sample_seed);
      GapReport mod = modulus_gap(f, n, k, config.tolerance_slack);
      push(out,
           make_report("modulus_le_min_gap", k, 0, mod.lhs - gap_min.value, 0.0,
                       config.tolerance_identity),
           n, sample_seed);
      push(out, std::move(mod), n, sample_seed);
    }
    for (GapReport& report : coeff_bound(resized(f, config.max_k), n)) {
      push(out, std::move(report), n, sample_seed);
    }
    const TruncatedSeries f_scan = member_from_p(p_scan, n, kScanOrder);
    const double f_min_re = parallel
                                ? verify_membership(f_scan, n, kScanRadius, kScanGrid)
                                : verify_membership_serial(f_scan, n, kScanRadius,
                                                           kScanGrid);
    push(out, positivity_report("membership_min_re", f_min_re), n, sample_seed);

    const TruncatedSeries f_odd = odd_member_from_q(q, n, config.order);
    for (GapReport& report : odd_coeff_bound(resized(f_odd, config.max_k), n)) {
      push(out, std::move(report), n, sample_seed);
    }
    const TruncatedSeries f_odd_scan = odd_member_from_q(q_scan, n, kScanOrder);
    const double odd_min_re =
        parallel ? verify_membership(f_odd_scan, n, kScanRadius, kScanGrid)
                 : verify_membership_serial(f_odd_scan, n, kScanRadius, kScanGrid);
    push(out, positivity_report("odd_membership_min_re", odd_min_re), n, sample_seed);
  }

  const HerglotzMeasure convex_mu =
      random_measure(split_seed(sample_seed, kConvexStream), kMaxAtoms);
  const TruncatedSeries p_convex = p_from_measure(convex_mu, config.order);
  const TruncatedSeries g = member_from_p(p_convex, 1, config.order);
  const TruncatedSeries p_close = p_from_measure(
      random_measure(split_seed(sample_seed, kCloseStream), kMaxAtoms), config.order);
  const TruncatedSeries f_cc = close_to_convex(g, p_close, config.order);

  for (int k = 2; k <= config.max_k; ++k) {
    for (int m = 1; m < k; ++m) {
      push(out, robertson_gap(f_cc, k, m, config.tolerance_slack), std::nullopt,
           sample_seed);
    }
  }
  for (int k = 1; k <= config.max_k; ++k) {
    push(out, robertson_step(f_cc, k, config.tolerance_slack), std::nullopt,
         sample_seed);
    push(out,
         make_report("convolution_identity", k, 0,
                     convolution_identity(f_cc, g, p_close, k), 0.0,
                     config.tolerance_identity),
         std::nullopt, sample_seed);
  }

  const TruncatedSeries g_scan =
      member_from_p(p_from_measure(convex_mu, kScanOrder), 1, kScanOrder);
  const double g_min_re =
      parallel ? verify_membership(g_scan, 1, kScanRadius, kScanGrid)
               : verify_membership_serial(g_scan, 1, kScanRadius, kScanGrid);
  push(out, positivity_report("convex_membership_min_re", g_min_re), 1, sample_seed);

  return out;
}

}  // namespace

void validate_config(const RunConfig& config) {
  if (config.max_k < 1) {
    throw std::invalid_argument("config: max_k must be at least 1");
  }
  if (config.order < config.max_k + 1) {
    throw std::invalid_argument("config: order must be at least max_k + 1");
  }
  if (config.samples < 1) {
    throw std::invalid_argument("config: samples must be at least 1");
  }
  if (config.grid < 8) {
    throw std::invalid_argument("config: grid must be at least 8");
  }
  if (config.n_values.empty()) {
    throw std::invalid_argument("config: n_values must not be empty");
  }
  for (int n : config.n_values) {
    if (n < 0) {
      throw std::invalid_argument("config: n_values entries must be nonnegative");
    }
  }
}

SweepSummary run_verification(const RunConfig& config, const RowSink& sink,
                              bool parallel) {
  validate_config(config);
  SweepSummary summary;

  const int extremal_units = static_cast<int>(config.n_values.size()) *
                             kExtremalRootCount * kExtremalRootCount;
  run_units(extremal_units, parallel, sink, summary,
            [&config](int index) { return extremal_unit(config, index); });

  run_units(config.samples, parallel, sink, summary, [&config, parallel](int index) {
    return sample_unit(config, index, parallel);
  });

  return summary;
}

}  // namespace sncoeff

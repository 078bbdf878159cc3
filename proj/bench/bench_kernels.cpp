#include <benchmark/benchmark.h>

#include "sncoeff/caratheodory.hpp"
#include "sncoeff/classes.hpp"
#include "sncoeff/inequalities.hpp"
#include "sncoeff/rng.hpp"
#include "sncoeff/sweep.hpp"

namespace {

sncoeff::TruncatedSeries fixture_p(int order) {
  return sncoeff::p_from_measure(sncoeff::random_measure(42, sncoeff::kMaxAtoms),
                                 order);
}

void bm_gap_search_serial(benchmark::State& state) {
  const auto f = sncoeff::member_from_p(fixture_p(32), 2, 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sncoeff::min_gap_over_circle_serial(f, 2, 8, 2048));
  }
}
BENCHMARK(bm_gap_search_serial);

void bm_gap_search_parallel(benchmark::State& state) {
  const auto f = sncoeff::member_from_p(fixture_p(32), 2, 32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sncoeff::min_gap_over_circle(f, 2, 8, 2048));
  }
}
BENCHMARK(bm_gap_search_parallel);

void bm_leung_search_serial(benchmark::State& state) {
  const auto p = fixture_p(32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sncoeff::leung_nu_search_serial(p, 12, 2048));
  }
}
BENCHMARK(bm_leung_search_serial);

void bm_leung_search_parallel(benchmark::State& state) {
  const auto p = fixture_p(32);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sncoeff::leung_nu_search(p, 12, 2048));
  }
}
BENCHMARK(bm_leung_search_parallel);

void bm_membership_scan_serial(benchmark::State& state) {
  const auto f =
      sncoeff::member_from_p(fixture_p(sncoeff::kScanOrder), 1, sncoeff::kScanOrder);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sncoeff::verify_membership_serial(
        f, 1, sncoeff::kScanRadius, sncoeff::kScanGrid));
  }
}
BENCHMARK(bm_membership_scan_serial);

void bm_membership_scan_parallel(benchmark::State& state) {
  const auto f =
      sncoeff::member_from_p(fixture_p(sncoeff::kScanOrder), 1, sncoeff::kScanOrder);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sncoeff::verify_membership(
        f, 1, sncoeff::kScanRadius, sncoeff::kScanGrid));
  }
}
BENCHMARK(bm_membership_scan_parallel);

void bm_small_sweep(benchmark::State& state) {
  sncoeff::RunConfig config;
  config.samples = 2;
  config.grid = 256;
  for (auto _ : state) {
    long long rows = 0;
    auto sink = [&rows](const sncoeff::SweepRow&) { ++rows; };
    benchmark::DoNotOptimize(
        sncoeff::run_verification(config, sink, state.range(0) != 0));
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(bm_small_sweep)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();

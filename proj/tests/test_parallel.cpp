#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <string>
#include <vector>

#include "sncoeff/caratheodory.hpp"
#include "sncoeff/classes.hpp"
#include "sncoeff/inequalities.hpp"
#include "sncoeff/io.hpp"
#include "sncoeff/sweep.hpp"

using sncoeff::TruncatedSeries;

namespace {

// The box runs single-core; force a real thread pool so the parallel paths
// actually interleave.
struct ThreadSetup {
  ThreadSetup() {
#ifdef _OPENMP
    omp_set_num_threads(4);
#endif
  }
};
const ThreadSetup thread_setup;

TruncatedSeries member(std::uint64_t seed, int n, int order) {
  return sncoeff::member_from_p(
      p_from_measure(sncoeff::random_measure(seed, sncoeff::kMaxAtoms), order), n,
      order);
}

}  // namespace

TEST_CASE("gap search is bitwise identical in serial and parallel") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const TruncatedSeries f = member(seed, 2, 16);
    for (int k = 1; k <= 8; ++k) {
      const sncoeff::CircleMin par = sncoeff::min_gap_over_circle(f, 2, k, 512);
      const sncoeff::CircleMin ser = sncoeff::min_gap_over_circle_serial(f, 2, k, 512);
      CHECK(par.value == ser.value);
      CHECK(par.arg.angle() == ser.arg.angle());
    }
  }
}

TEST_CASE("leung search is bitwise identical in serial and parallel") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const TruncatedSeries p =
        p_from_measure(sncoeff::random_measure(seed, sncoeff::kMaxAtoms), 12);
    for (int k = 1; k <= 12; ++k) {
      const sncoeff::LeungResult par = sncoeff::leung_nu_search(p, k, 1024);
      const sncoeff::LeungResult ser = sncoeff::leung_nu_search_serial(p, k, 1024);
      CHECK(par.achieved == ser.achieved);
      CHECK(par.nu.value() == ser.nu.value());
    }
  }
}

TEST_CASE("grid scans are bitwise identical in serial and parallel") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const TruncatedSeries p =
        p_from_measure(sncoeff::random_measure(seed, sncoeff::kMaxAtoms), 48);
    CHECK(sncoeff::min_real_part(p, 0.9, 256) ==
          sncoeff::min_real_part_serial(p, 0.9, 256));

    const TruncatedSeries f = sncoeff::member_from_p(p, 1, 48);
    CHECK(sncoeff::verify_membership(f, 1, 0.9, 256) ==
          sncoeff::verify_membership_serial(f, 1, 0.9, 256));
  }
}

TEST_CASE("the full sweep emits identical rows in serial and parallel") {
  sncoeff::RunConfig config;
  config.order = 16;
  config.max_k = 8;
  config.n_values = {0, 2};
  config.samples = 4;
  config.seed = 7;
  config.grid = 256;

  auto collect = [&config](bool parallel) {
    std::vector<std::string> rows;
    const sncoeff::SweepSummary summary = sncoeff::run_verification(
        config,
        [&rows](const sncoeff::SweepRow& row) { rows.push_back(sncoeff::sweep_csv_row(row)); },
        parallel);
    CHECK(summary.rows == static_cast<long long>(rows.size()));
    CHECK(summary.failures == 0);
    return rows;
  };

  const std::vector<std::string> parallel_rows = collect(true);
  const std::vector<std::string> serial_rows = collect(false);
  REQUIRE(parallel_rows.size() == serial_rows.size());
  CHECK(parallel_rows == serial_rows);
}

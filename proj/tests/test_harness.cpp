#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macc/analysis.hpp"
#include "macc/errors.hpp"
#include "macc/harness.hpp"
#include "test_util.hpp"

using namespace macc;

TEST_CASE("file synthesis is deterministic and sized by granularity") {
  const auto params = SystemParams::make(5, 5, 1, 2);
  const auto a = synthesize_files(params, 10, 99, 1);
  const auto b = synthesize_files(params, 10, 99, 1);
  const auto c = synthesize_files(params, 10, 100, 1);
  CHECK(a.files == b.files);
  CHECK(a.files != c.files);
  CHECK(a.file_size() == 10);
  CHECK(a.files.size() == 5);
  CHECK(synthesize_files(params, 10, 99, 3).file_size() == 30);
  CHECK_THROWS_AS(synthesize_files(params, 10, 99, 0), InvalidParamsError);
}

TEST_CASE("granularity of the worked examples") {
  const auto p1 = SystemParams::make(5, 5, 1, 2);
  CHECK(payload_granularity(build_schedule(p1, testutil::identity_demands(p1))) == 10);
  const auto p3 = SystemParams::make(9, 9, 2, 2);
  CHECK(payload_granularity(build_schedule(p3, testutil::identity_demands(p3))) == 27);
}

TEST_CASE("end to end on the worked examples") {
  SUBCASE("K=5 k=1 z=2") {
    const auto params = SystemParams::make(5, 5, 1, 2);
    const auto report = end_to_end(params, testutil::identity_demands(params), 1, 1);
    CHECK(report.all_success());
    CHECK(report.measured_rate == Rational(3, 2));
    CHECK(report.rate_match());
    CHECK(report.symbols_sent == 10);
    CHECK(report.bytes_sent == 15);
  }
  SUBCASE("K=8 k=1 z=4") {
    const auto params = SystemParams::make(8, 8, 1, 4);
    const auto report = end_to_end(params, testutil::identity_demands(params), 2, 1);
    CHECK(report.all_success());
    CHECK(report.measured_rate == Rational(5, 3));
    CHECK(report.rate_match());
  }
  SUBCASE("full coverage sends nothing") {
    const auto params = SystemParams::make(6, 6, 3, 2);
    const auto report = end_to_end(params, testutil::identity_demands(params), 3, 1);
    CHECK(report.all_success());
    CHECK(report.bytes_sent == 0);
    CHECK(report.symbols_sent == 0);
    CHECK(report.measured_rate == Rational(0));
    CHECK(report.rate_match());
  }
  SUBCASE("repeated demands decode too") {
    const auto params = SystemParams::make(5, 5, 1, 2);
    const auto report = end_to_end(params, DemandVector::make({2, 2, 2, 2, 2}, params), 4, 1);
    CHECK(report.all_success());
    CHECK(report.measured_rate == Rational(3, 2));  // schedule size is demand-oblivious
  }
  SUBCASE("larger scale") {
    const auto params = SystemParams::make(9, 9, 2, 2);
    const auto report = end_to_end(params, worst_case_demands(params, 8), 5, 4);
    CHECK(report.all_success());
    CHECK(report.rate_match());
  }
}

TEST_CASE("randomized trials") {
  SUBCASE("odd deficit with k > 1") {
    const auto params = SystemParams::make(9, 9, 2, 2);
    const auto agg = randomized_trials(params, 100, 7);
    CHECK(agg.trials == 100);
    CHECK(agg.failures == 0);
    CHECK(agg.distinct_demand_vectors_tested > 1);
  }
  SUBCASE("even deficit") {
    const auto params = SystemParams::make(12, 12, 1, 5);
    const auto agg = randomized_trials(params, 50, 13);
    CHECK(agg.trials == 50);
    CHECK(agg.failures == 0);
  }
  SUBCASE("zero trials") {
    const auto params = SystemParams::make(5, 5, 1, 2);
    const auto agg = randomized_trials(params, 0, 0);
    CHECK(agg.trials == 0);
    CHECK(agg.failures == 0);
    CHECK(agg.distinct_demand_vectors_tested == 0);
  }
}

TEST_CASE("measured rate equals the closed form on random instances") {
  testutil::for_each_valid_instance(3, 10, [](const SystemParams& params) {
    const auto report = end_to_end(params, worst_case_demands(params, 31), 37, 1);
    CHECK(report.all_success());
    CHECK(report.measured_rate ==
          rate_new(params.num_users, params.cache_subfiles, params.access_degree));
  });
}

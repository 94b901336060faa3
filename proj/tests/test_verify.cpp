#include "fibsub/verify.hpp"

#include <cstdint>

#include "doctest.h"

using namespace fibsub;

TEST_CASE("partition cursor enumerates the three sets in lockstep") {
  // B, B+1, AB+1 restricted to [1, 18].
  const bool in_b[] = {false, false, true,  false, false, true,  false,
                       true,  false, false, true,  false, false, true,
                       false, true,  false, false, true};
  const bool in_b1[] = {false, true,  false, true,  false, false, true,
                        false, true,  false, false, true,  false, false,
                        true,  false, true,  false, false};
  const bool in_ab1[] = {false, false, false, false, true,  false, false,
                         false, false, true,  false, false, true,  false,
                         false, false, false, true,  false};
  PartitionCursor cursor;
  for (std::uint64_t x = 1; x <= 18; ++x) {
    auto m = cursor.advance();
    CAPTURE(x);
    CHECK(m.in_b == in_b[x]);
    CHECK(m.in_b1 == in_b1[x]);
    CHECK(m.in_ab1 == in_ab1[x]);
  }
}

TEST_CASE("verify_partition on [1, 18]") {
  auto report = verify_partition(18);
  CHECK(report.passed);
  CHECK(report.lo == 1);
  CHECK(report.hi == 18);
  CHECK(!report.first_counterexample.has_value());
  CHECK(report.counts == ClassCounts{0, 7, 7, 4});
}

TEST_CASE("verify_partition on [1, 1]") {
  auto report = verify_partition(1);
  CHECK(report.passed);
  CHECK(report.counts == ClassCounts{0, 0, 1, 0});
}

TEST_CASE("verify_partition at 10^6") {
  auto report = verify_partition(1000000);
  CHECK(report.passed);
  CHECK(report.counts.total() == 1000000);
  CHECK(report.counts.b == 381966);  // floor(10^6 / phi^2)
}

TEST_CASE("verify_equivalence on tiny ranges") {
  auto r0 = verify_equivalence(0);
  CHECK(r0.passed);
  CHECK(r0.counts == ClassCounts{1, 0, 0, 0});

  auto r17 = verify_equivalence(17);
  CHECK(r17.passed);
  CHECK(r17.counts.total() == 18);
}

TEST_CASE("verify_equivalence at 10^5") {
  auto report = verify_equivalence(100000);
  CHECK(report.passed);
  CHECK(!report.first_counterexample.has_value());
  CHECK(report.counts.total() == 100001);
  CHECK(report.counts.terminal == 1);
}

TEST_CASE("report counts always sum to the range size") {
  for (std::uint64_t n : {1ull, 2ull, 17ull, 100ull, 12345ull}) {
    auto partition = verify_partition(n);
    CHECK(partition.counts.total() == n);
    auto equivalence = verify_equivalence(n);
    CHECK(equivalence.counts.total() == n + 1);
  }
}

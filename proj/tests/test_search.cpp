#include "doctest.h"
#include "obp/construct.hpp"
#include "obp/search.hpp"
#include "obp/verify.hpp"
#include "oracles.hpp"

using namespace obp;

TEST_SUITE_BEGIN("search");

TEST_CASE("K_2 needs one biclique in every mode") {
  for (auto mode : {CoverMode::partition, CoverMode::two_cover, CoverMode::ordered}) {
    const auto result = feasible(2, 1, mode);
    REQUIRE(result.status == SearchStatus::found);
    CHECK(*result.witness == OrderedPartition(2, {Biclique({1}, {2})}));
  }
}

TEST_CASE("K_4 has no partition into two bicliques") {
  CHECK(feasible(4, 2, CoverMode::partition).status == SearchStatus::none);
  CHECK(feasible(4, 3, CoverMode::partition).status == SearchStatus::found);
}

TEST_CASE("K_6 has an ordered partition of size 4 and none of size 3") {
  const auto found = feasible(6, 4, CoverMode::ordered);
  REQUIRE(found.status == SearchStatus::found);
  CHECK(verify_ordered(*found.witness).pass);
  CHECK(feasible(6, 3, CoverMode::ordered).status == SearchStatus::none);
}

TEST_CASE("partition numbers of small complete graphs") {
  for (int n = 2; n <= 5; ++n) {
    const auto result = min_cover_size(n, CoverMode::partition);
    REQUIRE(result.known);
    CHECK(result.value == n - 1);
    CHECK(verify_cover(*result.witness, CoverMode::partition).pass);
    CHECK(result.witness->size() == static_cast<std::size_t>(n - 1));
  }
}

TEST_CASE("search agrees with unrestricted enumeration for n <= 4") {
  for (int n = 2; n <= 4; ++n)
    for (auto mode : {CoverMode::partition, CoverMode::two_cover, CoverMode::ordered}) {
      CAPTURE(n);
      CAPTURE(to_string(mode));
      const auto result = min_cover_size(n, mode);
      REQUIRE(result.known);
      CHECK(result.value == oracle::min_cover(n, mode));
      CHECK(verify_cover(*result.witness, mode).pass);
    }
}

TEST_CASE("ordered cover of K_3") {
  const auto result = min_cover_size(3, CoverMode::ordered);
  REQUIRE(result.known);
  CHECK(result.value == oracle::min_cover(3, CoverMode::ordered));
}

TEST_CASE("mode monotonicity and witness validity up to n = 6") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const auto two = min_cover_size(n, CoverMode::two_cover);
    const auto ordered = min_cover_size(n, CoverMode::ordered);
    REQUIRE(two.known);
    REQUIRE(ordered.known);
    CHECK(verify_cover(*two.witness, CoverMode::two_cover).pass);
    CHECK(verify_ordered(*ordered.witness).pass);
    CHECK(two.value <= ordered.value);
    const auto part = min_cover_size(n, CoverMode::partition);
    REQUIRE(part.known);
    CHECK(ordered.value <= part.value);
  }
}

TEST_CASE("K_8 ordered cover is within the construction bound") {
  const auto result = min_cover_size(8, CoverMode::ordered);
  REQUIRE(result.known);
  CHECK(static_cast<std::uint64_t>(result.value) <= predicted_size(2, 2));
}

TEST_CASE("search is deterministic") {
  const auto a = min_cover_size(6, CoverMode::ordered);
  const auto b = min_cover_size(6, CoverMode::ordered);
  CHECK(a.value == b.value);
  CHECK(*a.witness == *b.witness);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("budget exhaustion reports unknown with a bracket") {
  SearchOptions tight;
  tight.node_budget = 50;
  const auto result = min_cover_size(6, CoverMode::ordered, tight);
  CHECK_FALSE(result.known);
  CHECK(result.lower >= 1);
  CHECK(result.upper == 5);
  CHECK(result.lower <= 4);
  CHECK(feasible(6, 3, CoverMode::ordered, tight).status == SearchStatus::unknown);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(feasible(1, 1, CoverMode::ordered), std::invalid_argument);
  CHECK_THROWS_AS(feasible(3, 0, CoverMode::ordered), std::invalid_argument);
}

TEST_SUITE_END();

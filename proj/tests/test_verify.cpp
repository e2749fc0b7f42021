#include "doctest.h"
#include "obp/construct.hpp"
#include "obp/verify.hpp"
#include "oracles.hpp"

#include <random>

using namespace obp;

namespace {

OrderedPartition k6_fixture() {
  return OrderedPartition(6, {Biclique({1, 2}, {4, 6}), Biclique({1, 3}, {2, 5}), Biclique({3, 6}, {1, 4}),
                              Biclique({2, 4, 6}, {3, 5})});
}

// D_j wrap shifted by one position.
bool shifted_wrap_membership(const EdgeFamilyId& family, std::span<const int> u, std::span<const int> v, int k) {
  if (family.kind != FamilyKind::D) return in_family(family, u, v, k);
  if (u[family.j - 1] == v[family.j - 1]) return false;
  for (int ell = 0; ell <= k - 2; ++ell) {
    const int p = ((k + family.j + ell) % (2 * k - 1)) + 1;
    if (u[p - 1] != v[p - 1]) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("K_6 example partition") {
  const auto result = verify_ordered(k6_fixture());
  CHECK(result.pass);
  CHECK(result.report.once_count == 12);
  CHECK(result.report.twice_count == 3);
  CHECK(result.report.violations.empty());
  const std::vector<std::pair<Vertex, Vertex>> doubled{{1, 6}, {2, 3}, {3, 4}};
  CHECK(result.report.doubly_covered == doubled);
}

TEST_CASE("K_6 example with the third biclique reversed") {
  const OrderedPartition p(6, {Biclique({1, 2}, {4, 6}), Biclique({1, 3}, {2, 5}), Biclique({1, 4}, {3, 6}),
                               Biclique({2, 4, 6}, {3, 5})});
  const auto result = verify_ordered(p);
  CHECK_FALSE(result.pass);
  const EdgeViolation expected{1, 6, CoverageViolation::same_orientation_double};
  CHECK(std::ranges::find(result.report.violations, expected) != result.report.violations.end());
}

TEST_CASE("trivial partitions of K_2") {
  const auto one = coverage_report(OrderedPartition(2, {Biclique({1}, {2})}));
  CHECK(one.once_count == 1);
  CHECK(one.twice_count == 0);
  CHECK(one.violations.empty());

  const auto empty = verify_ordered(OrderedPartition(2, {}));
  CHECK_FALSE(empty.pass);
  REQUIRE(empty.report.violations.size() == 1);
  CHECK(empty.report.violations[0] == EdgeViolation{1, 2, CoverageViolation::uncovered});
}

TEST_CASE("over-covered edges are reported") {
  const OrderedPartition p(2, {Biclique({1}, {2}), Biclique({2}, {1}), Biclique({1}, {2})});
  const auto report = coverage_report(p);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].reason == CoverageViolation::over_covered);
}

TEST_CASE("verify_cover distinguishes the three modes") {
  const OrderedPartition same_way(3, {Biclique({1}, {2, 3}), Biclique({1}, {2}), Biclique({2}, {3})});
  CHECK_FALSE(verify_cover(same_way, CoverMode::partition).pass);
  CHECK_FALSE(verify_cover(same_way, CoverMode::ordered).pass);
  CHECK(verify_cover(same_way, CoverMode::two_cover).pass);
  CHECK(verify_cover(k6_fixture(), CoverMode::ordered).pass);
  CHECK_FALSE(verify_cover(k6_fixture(), CoverMode::partition).pass);
  CHECK(verify_cover(build_partition(3, 1), CoverMode::partition).pass);
}

TEST_CASE("build_partition(2, 2) verifies") { CHECK(verify_ordered(build_partition(2, 2)).pass); }

TEST_CASE("coverage_report agrees with a direct count on random bicliques") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = std::uniform_int_distribution<int>(2, 9)(rng);
    const int count = std::uniform_int_distribution<int>(0, 6)(rng);
    std::vector<Biclique> bicliques;
    for (int b = 0; b < count; ++b) {
      std::vector<Vertex> first;
      std::vector<Vertex> second;
      for (Vertex v = 1; v <= static_cast<Vertex>(order); ++v) {
        const int side = std::uniform_int_distribution<int>(0, 2)(rng);
        if (side == 1) first.push_back(v);
        if (side == 2) second.push_back(v);
      }
      if (!first.empty() && !second.empty()) bicliques.emplace_back(first, second);
    }
    const OrderedPartition p(static_cast<Vertex>(order), bicliques);
    const auto report = coverage_report(p);
    const auto counts = oracle::orientation_counts(p);

    std::uint64_t once = 0;
    std::uint64_t twice = 0;
    std::vector<EdgeViolation> expected;
    for (const auto& [edge, c] : counts) {
      const int total = c.first + c.second;
      if (total == 0)
        expected.push_back({edge.first, edge.second, CoverageViolation::uncovered});
      else if (total > 2)
        expected.push_back({edge.first, edge.second, CoverageViolation::over_covered});
      else if (total == 1)
        ++once;
      else if (c.first == 1)
        ++twice;
      else
        expected.push_back({edge.first, edge.second, CoverageViolation::same_orientation_double});
    }
    CHECK(report.once_count == once);
    CHECK(report.twice_count == twice);
    CHECK(report.violations == expected);
    CHECK(report.once_count + report.twice_count + report.violations.size() ==
          static_cast<std::uint64_t>(order) * (order - 1) / 2);
  }
}

TEST_CASE("family laws hold") {
  CHECK(verify_family_laws(2, 2).pass);
  const auto big = verify_family_laws(3, 3);
  CHECK(big.pass);
  CHECK(big.pairs_checked == 243u * 242u / 2u);
  CHECK_THROWS_AS(verify_family_laws(3, 3, in_family, LawOptions{100, 10}), BudgetExceeded);
}

TEST_CASE("a shifted D_j wrap breaks the family laws") {
  const auto result = verify_family_laws(2, 2, shifted_wrap_membership);
  CHECK_FALSE(result.pass);
  CHECK_FALSE(result.counterexamples.empty());
}

TEST_CASE("doubly covered edges are exactly the C_i ∩ E_{i,j} pairs") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    CAPTURE(n);
    CAPTURE(k);
    std::uint64_t expected = 0;
    for (int i = 1; i <= k - 1; ++i)
      for (int j = 1; j <= i; ++j) {
        const auto c = oracle::family_edges(EdgeFamilyId::c(i), n, k);
        for (const auto& edge : oracle::family_edges(EdgeFamilyId::e(i, j), n, k)) expected += c.count(edge);
      }
    CHECK(coverage_report(build_partition(n, k)).twice_count == expected);
  }
}

TEST_SUITE_END();

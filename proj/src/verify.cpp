#include "obp/verify.hpp"

#include <algorithm>

namespace obp {

namespace {

constexpr std::uint64_t kMaxVerifyVertices = 8192;

// Ordered-pair coverage counts, saturating at 3.
class OrientationTable {
 public:
  explicit OrientationTable(Vertex order) : order_(order), counts_(static_cast<std::size_t>(order) * order, 0) {}

  void add(Vertex from, Vertex to) {
    auto& c = counts_[slot(from, to)];
    if (c < 3) ++c;
  }
  std::uint8_t operator()(Vertex from, Vertex to) const { return counts_[slot(from, to)]; }

 private:
  std::size_t slot(Vertex from, Vertex to) const {
    return static_cast<std::size_t>(from - 1) * order_ + static_cast<std::size_t>(to - 1);
  }

  Vertex order_;
  std::vector<std::uint8_t> counts_;
};

std::vector<std::vector<int>> all_coords(Vertex order, int n, int k) {
  std::vector<std::vector<int>> coords;
  coords.reserve(order);
  for (Vertex x = 1; x <= order; ++x) {
    const VertexCoords c = coords_of(x, n, k);
    coords.emplace_back(c.values().begin(), c.values().end());
  }
  return coords;
}

}  // namespace

std::string to_string(CoverageViolation reason) {
  switch (reason) {
    case CoverageViolation::uncovered: return "uncovered";
    case CoverageViolation::over_covered: return "over-covered";
    case CoverageViolation::same_orientation_double: return "same-orientation-double";
  }
  return "?";
}

CoverageReport coverage_report(const OrderedPartition& partition) {
  const Vertex order = partition.universe_size();
  if (order > kMaxVerifyVertices)
    throw BudgetExceeded("coverage check is limited to " + std::to_string(kMaxVerifyVertices) + " vertices");

  OrientationTable table(order);
  for (const auto& b : partition.bicliques())
    for (Vertex u : b.first())
      for (Vertex w : b.second()) table.add(u, w);

  CoverageReport report;
  for (Vertex u = 1; u <= order; ++u) {
    for (Vertex v = u + 1; v <= order; ++v) {
      const int forward = table(u, v);
      const int backward = table(v, u);
      const int total = forward + backward;
      if (total == 0) {
        report.violations.push_back({u, v, CoverageViolation::uncovered});
      } else if (total > 2) {
        report.violations.push_back({u, v, CoverageViolation::over_covered});
      } else if (total == 1) {
        ++report.once_count;
      } else if (forward == 1) {
        ++report.twice_count;
        report.doubly_covered.emplace_back(u, v);
      } else {
        report.violations.push_back({u, v, CoverageViolation::same_orientation_double});
      }
    }
  }
  return report;
}

VerifyResult verify_ordered(const OrderedPartition& partition) {
  VerifyResult result{false, coverage_report(partition)};
  result.pass = result.report.violations.empty();
  return result;
}

VerifyResult verify_cover(const OrderedPartition& partition, CoverMode mode) {
  VerifyResult result{false, coverage_report(partition)};
  const auto& violations = result.report.violations;
  switch (mode) {
    case CoverMode::ordered:
      result.pass = violations.empty();
      break;
    case CoverMode::partition:
      result.pass = violations.empty() && result.report.twice_count == 0;
      break;
    case CoverMode::two_cover:
      result.pass = std::ranges::none_of(violations, [](const EdgeViolation& e) {
        return e.reason != CoverageViolation::same_orientation_double;
      });
      break;
  }
  return result;
}

FamilyLawsResult verify_family_laws(int n, int k, const FamilyMembership& membership, const LawOptions& options) {
  const Vertex order = host_order(n, k, options.max_vertices);
  const auto coords = all_coords(order, n, k);
  const auto families = all_families(k);

  FamilyLawsResult result;
  const auto fail = [&](Vertex u, Vertex v, std::string law) {
    if (result.counterexamples.size() < options.max_counterexamples)
      result.counterexamples.push_back({u, v, std::move(law)});
    result.pass = false;
  };
  result.pass = true;

  std::vector<char> member(families.size());
  for (Vertex u = 1; u <= order; ++u) {
    const std::span<const int> cu = coords[u - 1];
    for (Vertex v = u + 1; v <= order; ++v) {
      const std::span<const int> cv = coords[v - 1];
      ++result.pairs_checked;
      const auto same = [&](int p) { return cu[p - 1] == cv[p - 1]; };
      const auto same_range = [&](int from, int to) {
        for (int p = from; p <= to; ++p)
          if (!same(p)) return false;
        return true;
      };

      bool any = false;
      for (std::size_t f = 0; f < families.size(); ++f) {
        member[f] = membership(families[f], cu, cv, k) ? 1 : 0;
        any = any || member[f];
      }
      if (!any) fail(u, v, "pair lies in no family");

      for (std::size_t f = 0; f < families.size(); ++f) {
        for (std::size_t g = f + 1; g < families.size(); ++g) {
          if (!member[f] || !member[g]) continue;
          const auto& a = families[f];
          const auto& b = families[g];
          const bool allowed = a.kind == FamilyKind::C && b.kind == FamilyKind::E && a.i == b.i;
          if (!allowed) fail(u, v, to_string(a) + " and " + to_string(b) + " intersect");
        }
      }

      for (std::size_t f = 0; f < families.size(); ++f) {
        const auto& e = families[f];
        if (e.kind != FamilyKind::E) continue;
        const std::size_t c = static_cast<std::size_t>(e.i);  // C_i sits at index i
        const bool both = member[c] && member[f];
        const bool closed_form = !same(e.j) && !same(k + e.i) && same_range(1, e.j - 1) &&
                                 same_range(e.i + 1, k + e.i - 1);
        if (both != closed_form) fail(u, v, "C_i ∩ E_{i,j} differs from its closed form for " + to_string(e));
      }

      if (same_range(1, k - 1)) {
        bool in_c = false;
        for (int i = 0; i <= k - 1; ++i) in_c = in_c || member[static_cast<std::size_t>(i)];
        if (!in_c) fail(u, v, "pair agreeing on x_1..x_{k-1} lies in no C_i");
      }

      for (int j = 1; j <= k - 1; ++j) {
        bool in_union = false;
        for (std::size_t f = 0; f < families.size(); ++f) {
          const auto& fam = families[f];
          if (member[f] && fam.j == j && fam.kind != FamilyKind::C) in_union = true;
        }
        const bool expected = !same(j) && same_range(1, j - 1);
        if (in_union != expected) fail(u, v, "D_" + std::to_string(j) + " ∪ E_{*," + std::to_string(j) + "} identity fails");
      }
    }
  }
  return result;
}

std::string constraint_pattern(const EdgeFamilyId& family, int k) {
  constexpr int n = 2;
  const Vertex order = host_order(n, k, std::uint64_t{1} << 20);
  const auto coords = all_coords(order, n, k);
  const int dim = 2 * k - 1;
  std::vector<bool> always_equal(static_cast<std::size_t>(dim), true);
  std::vector<bool> always_differ(static_cast<std::size_t>(dim), true);
  for (Vertex u = 1; u <= order; ++u) {
    for (Vertex v = u + 1; v <= order; ++v) {
      if (!in_family(family, coords[u - 1], coords[v - 1], k)) continue;
      for (int p = 0; p < dim; ++p) {
        const bool eq = coords[u - 1][p] == coords[v - 1][p];
        always_equal[p] = always_equal[p] && eq;
        always_differ[p] = always_differ[p] && !eq;
      }
    }
  }
  std::string pattern;
  for (int p = 0; p < dim; ++p) pattern += always_equal[p] ? 'o' : always_differ[p] ? 'x' : '-';
  return pattern;
}

}  // namespace obp

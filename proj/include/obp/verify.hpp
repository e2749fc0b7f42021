#ifndef OBP_VERIFY_HPP
#define OBP_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "obp/core.hpp"

namespace obp {

enum class CoverageViolation : std::uint8_t { uncovered, over_covered, same_orientation_double };

std::string to_string(CoverageViolation reason);

struct EdgeViolation {
  Vertex u = 0;  ///< smaller endpoint
  Vertex v = 0;
  CoverageViolation reason = CoverageViolation::uncovered;

  bool operator==(const EdgeViolation&) const = default;
};

/// Per-edge coverage of a candidate partition. Violations are listed exhaustively, ordered by (u, v).
struct CoverageReport {
  std::uint64_t once_count = 0;
  std::uint64_t twice_count = 0;
  std::vector<EdgeViolation> violations;
  /// Edges covered exactly twice, in (u, v) order.
  std::vector<std::pair<Vertex, Vertex>> doubly_covered;
};

CoverageReport coverage_report(const OrderedPartition& partition);

struct VerifyResult {
  bool pass = false;
  CoverageReport report;
};

/// Ordered biclique partition check: every edge covered once, or twice with opposite orientations.
VerifyResult verify_ordered(const OrderedPartition& partition);

/// Cover check for any mode: partition needs every edge exactly once, two_cover once or twice.
VerifyResult verify_cover(const OrderedPartition& partition, CoverMode mode);

/// Membership predicate used by the family-law checker; defaults to obp::in_family.
using FamilyMembership =
    std::function<bool(const EdgeFamilyId&, std::span<const int>, std::span<const int>, int k)>;

struct LawViolation {
  Vertex u = 0;
  Vertex v = 0;
  std::string law;
};

struct FamilyLawsResult {
  bool pass = false;
  std::uint64_t pairs_checked = 0;
  std::vector<LawViolation> counterexamples;
};

struct LawOptions {
  std::uint64_t max_vertices = 4096;
  /// Stop collecting after this many counterexamples (checking still covers every pair).
  std::size_t max_counterexamples = 1000;
};

/// Brute force over all pairs of [n]^(2k-1): completeness, disjointness apart from C_i ∩ E_{i,j},
/// the closed form of C_i ∩ E_{i,j}, and the two union identities. Throws BudgetExceeded.
FamilyLawsResult verify_family_laws(int n, int k, const FamilyMembership& membership = in_family,
                                    const LawOptions& options = {});

/// Per-coordinate pattern of a family, derived by enumerating its edges over n = 2:
/// 'o' when every edge agrees at that position, 'x' when every edge differs, '-' otherwise.
std::string constraint_pattern(const EdgeFamilyId& family, int k);

}  // namespace obp

#endif  // OBP_VERIFY_HPP

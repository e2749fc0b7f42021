#ifndef OBP_CONSTRUCT_HPP
#define OBP_CONSTRUCT_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "obp/core.hpp"

namespace obp {

/// Partition of a graph into stars B({v_t}, N(v_t) ∩ {v_{t+1}, ...}), roots taken in the given order.
/// Stars with no later neighbour are omitted, so at most |order| - 1 bicliques are emitted.
template <typename Adjacency>
std::vector<Biclique> star_partition(std::span<const Vertex> order, Adjacency&& adjacent) {
  std::vector<Biclique> stars;
  for (std::size_t t = 0; t < order.size(); ++t) {
    std::vector<Vertex> leaves;
    for (std::size_t s = t + 1; s < order.size(); ++s)
      if (adjacent(order[t], order[s])) leaves.push_back(order[s]);
    if (!leaves.empty()) stars.emplace_back(std::vector<Vertex>{order[t]}, std::move(leaves));
  }
  return stars;
}

/// Order in which star roots of a family's base graph are picked.
struct StarOrdering {
  enum class Direction : std::uint8_t { ascending, descending };

  /// Coordinate positions, most significant first.
  std::vector<int> significance;
  Direction direction = Direction::ascending;
};

/// Coordinate roles of a family: positions that must differ, must agree, or are free (blowup).
struct FamilyLayout {
  std::vector<int> differ;
  std::vector<int> equal;
  std::vector<int> free;
};

FamilyLayout family_layout(const EdgeFamilyId& family, int k);

/// Ascending on (x_{k+i} ... x_{i+1}) for C_i, ascending on (x_j, then its equality positions
/// from last to first) for D_j, descending on (x_{k+i} ... x_{k+j} x_j ... x_1) for E_{i,j}.
StarOrdering default_ordering(const EdgeFamilyId& family, int k);

/// Throws std::invalid_argument unless the ordering lists distinct base positions of the family
/// and starts with its leading differing coordinate (k+i for C and E, j for D).
void check_ordering(const StarOrdering& ordering, const EdgeFamilyId& family, int k);

using OrderingChoice = std::function<StarOrdering(const EdgeFamilyId&, int)>;

struct ConstructOptions {
  std::uint64_t max_vertices = std::uint64_t{1} << 16;
  OrderingChoice ordering = default_ordering;
};

/// Biclique partition of the family's edge graph inside K_{n^(2k-1)}: a star partition of the
/// base graph, each star blown up over the free coordinates.
std::vector<Biclique> build_family_bicliques(const EdgeFamilyId& family, int n, int k,
                                             const ConstructOptions& options = {});

/// Ordered biclique partition of K_{n^(2k-1)}: all C_i, then D_j, then E_{i,j}.
/// Throws BudgetExceeded when n^(2k-1) is over options.max_vertices.
OrderedPartition build_partition(int n, int k, const ConstructOptions& options = {});

/// (2k-1) n^(k-1) (n-1) + sum_{i=1}^{k-1} i n^i (n-1).
std::uint64_t predicted_size(int n, int k);

}  // namespace obp

#endif  // OBP_CONSTRUCT_HPP

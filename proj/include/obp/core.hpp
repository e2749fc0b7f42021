#ifndef OBP_CORE_HPP
#define OBP_CORE_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace obp {

/// 1-based vertex index of a complete graph K_N.
using Vertex = std::uint32_t;

/// Thrown when an instance would exceed a configured vertex or node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns base^exp, or 0 if the result does not fit below `cap`.
std::uint64_t checked_power(std::uint64_t base, unsigned exp, std::uint64_t cap);

/// Number of vertices n^(2k-1) of the host graph; throws BudgetExceeded above `max_vertices`.
Vertex host_order(int n, int k, std::uint64_t max_vertices);

/// A point of [n]^(2k-1). Coordinates are 1-based and x_1 is stored first.
class VertexCoords {
 public:
  VertexCoords(std::vector<int> coords, int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int dimension() const { return 2 * k_ - 1; }

  /// Coordinate x_position, position in [1, 2k-1].
  int operator[](int position) const { return coords_[position - 1]; }
  std::span<const int> values() const { return coords_; }

  bool operator==(const VertexCoords&) const = default;

 private:
  std::vector<int> coords_;
  int n_;
  int k_;
};

/// Mixed radix, x_1 least significant: 1 + sum (x_t - 1) n^(t-1).
Vertex index_of(const VertexCoords& coords);

/// Inverse of index_of. Throws std::out_of_range unless 1 <= index <= n^(2k-1).
VertexCoords coords_of(Vertex index, int n, int k);

/// Complete bipartite graph between two disjoint, nonempty vertex sets.
/// Both sides are kept sorted ascending.
class Biclique {
 public:
  /// Throws std::invalid_argument on an empty side, a repeated vertex, or overlapping sides.
  Biclique(std::vector<Vertex> first, std::vector<Vertex> second);

  const std::vector<Vertex>& first() const { return first_; }
  const std::vector<Vertex>& second() const { return second_; }

  bool operator==(const Biclique&) const = default;

 private:
  std::vector<Vertex> first_;
  std::vector<Vertex> second_;
};

/// A sequence of bicliques over the vertex universe [1, N].
class OrderedPartition {
 public:
  OrderedPartition() = default;
  /// Throws std::invalid_argument if a biclique references a vertex outside [1, N].
  OrderedPartition(Vertex universe_size, std::vector<Biclique> bicliques);

  Vertex universe_size() const { return universe_size_; }
  const std::vector<Biclique>& bicliques() const { return bicliques_; }
  std::size_t size() const { return bicliques_.size(); }

  bool operator==(const OrderedPartition&) const = default;

 private:
  Vertex universe_size_ = 0;
  std::vector<Biclique> bicliques_;
};

enum class FamilyKind : std::uint8_t { C, D, E };

/// One of the edge families C_i, D_j, E_{i,j}. Unused parameters are zero.
struct EdgeFamilyId {
  FamilyKind kind = FamilyKind::C;
  int i = 0;
  int j = 0;

  static EdgeFamilyId c(int i) { return {FamilyKind::C, i, 0}; }
  static EdgeFamilyId d(int j) { return {FamilyKind::D, 0, j}; }
  static EdgeFamilyId e(int i, int j) { return {FamilyKind::E, i, j}; }

  bool valid_for(int k) const;

  auto operator<=>(const EdgeFamilyId&) const = default;
};

std::string to_string(const EdgeFamilyId& family);

/// Every family defined for arity k, in emission order: C by i, D by j, E by (i, j).
std::vector<EdgeFamilyId> all_families(int k);

/// Position of the ell-th equality constraint of D_j, wrapped into [1, 2k-1].
inline int wrapped_position(int k, int j, int ell) { return ((k + j + ell - 1) % (2 * k - 1)) + 1; }

/// Membership of {u, v} in a family given coordinates x_1.. as 0-based spans.
/// The spans must have length 2k-1.
bool in_family(const EdgeFamilyId& family, std::span<const int> u, std::span<const int> v, int k);

/// Families whose defining predicate holds for {u, v}.
/// Throws std::invalid_argument if u == v or the parameters differ.
std::vector<EdgeFamilyId> classify_edge(const VertexCoords& u, const VertexCoords& v);

/// Coverage requirement for the exact searcher and the cover verifier.
enum class CoverMode : std::uint8_t {
  partition,  ///< every edge exactly once
  two_cover,  ///< every edge once or twice
  ordered,    ///< once or twice, opposite orientations when twice
};

std::string to_string(CoverMode mode);

}  // namespace obp

#endif  // OBP_CORE_HPP

#ifndef OBP_SEARCH_HPP
#define OBP_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "obp/core.hpp"

namespace obp {

/// Role of a vertex in one biclique of a label word.
enum class Label : std::uint8_t { absent = 0, first_side = 1, second_side = 2 };

/// Per-vertex label words of length m. Row v-1 holds the word of vertex v.
struct LabelAssignment {
  int m = 0;
  std::vector<std::vector<Label>> labels;

  /// Bicliques from the columns, skipping columns with an empty side.
  OrderedPartition to_partition() const;
};

struct SearchOptions {
  /// Maximum number of candidate label words examined; exhausting it yields `unknown`.
  std::uint64_t node_budget = 2'000'000'000;
};

enum class SearchStatus : std::uint8_t { found, none, unknown };

struct FeasibleResult {
  SearchStatus status = SearchStatus::unknown;
  std::optional<LabelAssignment> labels;
  std::optional<OrderedPartition> witness;
  std::uint64_t nodes = 0;
};

/// Looks for a cover of K_{n_vertices} with at most m bicliques in the given mode.
/// Rows are kept strictly increasing and columns non-decreasing (double lex), and the first
/// witness in that canonical space is returned, so results are deterministic.
/// Throws std::invalid_argument if n_vertices < 2 or m < 1.
FeasibleResult feasible(int n_vertices, int m, CoverMode mode, const SearchOptions& options = {});

struct MinCoverResult {
  bool known = false;
  int value = 0;                          ///< valid when known
  std::optional<OrderedPartition> witness;
  int lower = 1;                          ///< every m below this was refuted
  int upper = 0;                          ///< a cover of this size exists
  std::uint64_t nodes = 0;
};

/// Smallest m with a cover of K_{n_vertices}, trying m = 1, 2, ... in turn.
/// On budget exhaustion returns known = false with [lower, upper] bracketing the answer.
MinCoverResult min_cover_size(int n_vertices, CoverMode mode, const SearchOptions& options = {});

}  // namespace obp

#endif  // OBP_SEARCH_HPP

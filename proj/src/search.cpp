#include "obp/search.hpp"

#include <bit>
#include <stdexcept>

#include "obp/verify.hpp"

namespace obp {

OrderedPartition LabelAssignment::to_partition() const {
  std::vector<Biclique> bicliques;
  for (int c = 0; c < m; ++c) {
    std::vector<Vertex> first;
    std::vector<Vertex> second;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      if (labels[v][c] == Label::first_side) first.push_back(static_cast<Vertex>(v + 1));
      if (labels[v][c] == Label::second_side) second.push_back(static_cast<Vertex>(v + 1));
    }
    if (!first.empty() && !second.empty()) bicliques.emplace_back(std::move(first), std::move(second));
  }
  return OrderedPartition(static_cast<Vertex>(labels.size()), std::move(bicliques));
}

namespace {

constexpr int kMaxWordLength = 20;

// A label word as two bitmasks over biclique positions (bit p = position p).
struct Word {
  std::uint32_t first = 0;
  std::uint32_t second = 0;

  int digit(int p) const { return (first >> p & 1U) ? 1 : (second >> p & 1U) ? 2 : 0; }
};

class LabelSearch {
 public:
  LabelSearch(int n, int m, CoverMode mode, std::uint64_t budget)
      : n_(n), m_(m), mode_(mode), budget_(budget), rows_(static_cast<std::size_t>(n)) {
    total_ = 1;
    for (int p = 0; p < m; ++p) total_ *= 3;
  }

  SearchStatus run() {
    const std::uint32_t ties = m_ >= 2 ? (std::uint32_t{1} << (m_ - 1)) - 1 : 0;
    if (descend(0, 0, ties)) return SearchStatus::found;
    return exhausted_ ? SearchStatus::unknown : SearchStatus::none;
  }

  std::uint64_t nodes() const { return nodes_; }

  LabelAssignment labels() const {
    LabelAssignment result;
    result.m = m_;
    for (const auto& w : rows_) {
      std::vector<Label> word(static_cast<std::size_t>(m_));
      for (int p = 0; p < m_; ++p) word[p] = static_cast<Label>(w.digit(p));
      result.labels.push_back(std::move(word));
    }
    return result;
  }

 private:
  // Word at lexicographic rank `index`; position 0 is the most significant digit.
  Word decode(std::uint64_t index) const {
    Word w;
    for (int p = m_ - 1; p >= 0; --p) {
      const auto d = index % 3;
      index /= 3;
      if (d == 1) w.first |= std::uint32_t{1} << p;
      if (d == 2) w.second |= std::uint32_t{1} << p;
    }
    return w;
  }

  bool pair_ok(const Word& earlier, const Word& later) const {
    const int forward = std::popcount(earlier.first & later.second);
    const int backward = std::popcount(earlier.second & later.first);
    const int total = forward + backward;
    switch (mode_) {
      case CoverMode::partition: return total == 1;
      case CoverMode::two_cover: return total >= 1 && total <= 2;
      case CoverMode::ordered: return forward <= 1 && backward <= 1 && total >= 1;
    }
    return false;
  }

  bool descend(int row, std::uint64_t start, std::uint32_t ties) {
    if (row == n_) return true;
    const auto remaining = static_cast<std::uint64_t>(n_ - row);
    for (std::uint64_t index = start; index + remaining <= total_; ++index) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      const Word w = decode(index);

      // Columns stay lexicographically non-decreasing top to bottom.
      std::uint32_t next_ties = ties;
      bool columns_ok = true;
      for (std::uint32_t rest = ties; rest != 0; rest &= rest - 1) {
        const int c = std::countr_zero(rest);
        const int left = w.digit(c);
        const int right = w.digit(c + 1);
        if (left > right) {
          columns_ok = false;
          break;
        }
        if (left < right) next_ties &= ~(std::uint32_t{1} << c);
      }
      if (!columns_ok) continue;

      bool pairs_ok = true;
      for (int q = 0; q < row && pairs_ok; ++q) pairs_ok = pair_ok(rows_[q], w);
      if (!pairs_ok) continue;

      rows_[row] = w;
      if (descend(row + 1, index + 1, next_ties)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  int n_;
  int m_;
  CoverMode mode_;
  std::uint64_t budget_;
  std::uint64_t total_ = 1;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Word> rows_;
};

}  // namespace

FeasibleResult feasible(int n_vertices, int m, CoverMode mode, const SearchOptions& options) {
  if (n_vertices < 2) throw std::invalid_argument("search needs at least two vertices");
  if (m < 1) throw std::invalid_argument("search needs at least one biclique");
  if (m > kMaxWordLength) throw BudgetExceeded("label words longer than 20 are not supported");

  LabelSearch search(n_vertices, m, mode, options.node_budget);
  FeasibleResult result;
  result.status = search.run();
  result.nodes = search.nodes();
  if (result.status == SearchStatus::found) {
    result.labels = search.labels();
    result.witness = result.labels->to_partition();
    if (!verify_cover(*result.witness, mode).pass) throw std::logic_error("search produced an invalid witness");
  }
  return result;
}

MinCoverResult min_cover_size(int n_vertices, CoverMode mode, const SearchOptions& options) {
  if (n_vertices < 2) throw std::invalid_argument("search needs at least two vertices");
  MinCoverResult result;
  result.lower = 1;
  // Stars rooted at 1, ..., n-1 partition K_n.
  result.upper = n_vertices - 1;
  for (int m = 1; m <= result.upper; ++m) {
    SearchOptions remaining;
    remaining.node_budget = options.node_budget > result.nodes ? options.node_budget - result.nodes : 0;
    const FeasibleResult attempt = feasible(n_vertices, m, mode, remaining);
    result.nodes += attempt.nodes;
    if (attempt.status == SearchStatus::unknown) return result;
    if (attempt.status == SearchStatus::found) {
      result.known = true;
      result.value = m;
      result.upper = m;
      result.witness = attempt.witness;
      return result;
    }
    result.lower = m + 1;
  }
  throw std::logic_error("no cover found up to the star-partition bound");
}

}  // namespace obp

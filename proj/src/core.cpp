#include "obp/core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace obp {

std::uint64_t checked_power(std::uint64_t base, unsigned exp, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (unsigned t = 0; t < exp; ++t) {
    if (base != 0 && result > cap / base) return 0;
    result *= base;
  }
  return result > cap ? 0 : result;
}

Vertex host_order(int n, int k, std::uint64_t max_vertices) {
  if (n < 2 || k < 1) throw std::invalid_argument("need n >= 2 and k >= 1");
  const std::uint64_t cap = std::min<std::uint64_t>(max_vertices, std::numeric_limits<Vertex>::max());
  const std::uint64_t order = checked_power(static_cast<std::uint64_t>(n), static_cast<unsigned>(2 * k - 1), cap);
  if (order == 0) {
    std::ostringstream msg;
    msg << "n^(2k-1) for n=" << n << ", k=" << k << " exceeds the vertex budget of " << max_vertices;
    throw BudgetExceeded(msg.str());
  }
  return static_cast<Vertex>(order);
}

VertexCoords::VertexCoords(std::vector<int> coords, int n, int k) : coords_(std::move(coords)), n_(n), k_(k) {
  if (n < 2 || k < 1) throw std::invalid_argument("need n >= 2 and k >= 1");
  if (coords_.size() != static_cast<std::size_t>(2 * k - 1))
    throw std::invalid_argument("coordinate tuple must have length 2k-1");
  for (int x : coords_)
    if (x < 1 || x > n) throw std::invalid_argument("coordinate outside [1, n]");
}

Vertex index_of(const VertexCoords& coords) {
  std::uint64_t index = 0;
  const auto values = coords.values();
  for (auto it = values.rbegin(); it != values.rend(); ++it)
    index = index * static_cast<std::uint64_t>(coords.n()) + static_cast<std::uint64_t>(*it - 1);
  return static_cast<Vertex>(index + 1);
}

VertexCoords coords_of(Vertex index, int n, int k) {
  const Vertex order = host_order(n, k, std::numeric_limits<Vertex>::max());
  if (index < 1 || index > order) throw std::out_of_range("vertex index outside [1, n^(2k-1)]");
  std::vector<int> coords(static_cast<std::size_t>(2 * k - 1));
  Vertex rest = index - 1;
  for (auto& x : coords) {
    x = static_cast<int>(rest % static_cast<Vertex>(n)) + 1;
    rest /= static_cast<Vertex>(n);
  }
  return VertexCoords(std::move(coords), n, k);
}

Biclique::Biclique(std::vector<Vertex> first, std::vector<Vertex> second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.empty() || second_.empty()) throw std::invalid_argument("biclique side is empty");
  std::sort(first_.begin(), first_.end());
  std::sort(second_.begin(), second_.end());
  if (std::adjacent_find(first_.begin(), first_.end()) != first_.end() ||
      std::adjacent_find(second_.begin(), second_.end()) != second_.end())
    throw std::invalid_argument("biclique side repeats a vertex");
  std::vector<Vertex> common;
  std::set_intersection(first_.begin(), first_.end(), second_.begin(), second_.end(), std::back_inserter(common));
  if (!common.empty())
    throw std::invalid_argument("biclique sides share vertex " + std::to_string(common.front()));
}

OrderedPartition::OrderedPartition(Vertex universe_size, std::vector<Biclique> bicliques)
    : universe_size_(universe_size), bicliques_(std::move(bicliques)) {
  for (std::size_t b = 0; b < bicliques_.size(); ++b) {
    for (const auto* side : {&bicliques_[b].first(), &bicliques_[b].second()}) {
      // sides are sorted, so the extremes suffice
      if (side->front() < 1 || side->back() > universe_size_)
        throw std::invalid_argument("biclique " + std::to_string(b + 1) + " references a vertex outside [1, " +
                                    std::to_string(universe_size_) + "]");
    }
  }
}

bool EdgeFamilyId::valid_for(int k) const {
  switch (kind) {
    case FamilyKind::C: return 0 <= i && i <= k - 1 && j == 0;
    case FamilyKind::D: return i == 0 && 1 <= j && j <= k - 1;
    case FamilyKind::E: return 1 <= i && i <= k - 1 && 1 <= j && j <= i;
  }
  return false;
}

std::string to_string(const EdgeFamilyId& family) {
  switch (family.kind) {
    case FamilyKind::C: return "C_" + std::to_string(family.i);
    case FamilyKind::D: return "D_" + std::to_string(family.j);
    case FamilyKind::E: return "E_" + std::to_string(family.i) + "," + std::to_string(family.j);
  }
  return "?";
}

std::vector<EdgeFamilyId> all_families(int k) {
  std::vector<EdgeFamilyId> families;
  for (int i = 0; i <= k - 1; ++i) families.push_back(EdgeFamilyId::c(i));
  for (int j = 1; j <= k - 1; ++j) families.push_back(EdgeFamilyId::d(j));
  for (int i = 1; i <= k - 1; ++i)
    for (int j = 1; j <= i; ++j) families.push_back(EdgeFamilyId::e(i, j));
  return families;
}

bool in_family(const EdgeFamilyId& family, std::span<const int> u, std::span<const int> v, int k) {
  const auto same = [&](int position) { return u[position - 1] == v[position - 1]; };
  switch (family.kind) {
    case FamilyKind::C: {
      if (same(k + family.i)) return false;
      for (int ell = 1; ell <= k - 1; ++ell)
        if (!same(family.i + ell)) return false;
      return true;
    }
    case FamilyKind::D: {
      if (same(family.j)) return false;
      for (int ell = 0; ell <= k - 2; ++ell)
        if (!same(wrapped_position(k, family.j, ell))) return false;
      return true;
    }
    case FamilyKind::E: {
      if (same(family.j) || same(k + family.i)) return false;
      for (int ell = 1; ell <= family.j - 1; ++ell)
        if (!same(ell)) return false;
      for (int ell = k + family.j; ell <= k + family.i - 1; ++ell)
        if (!same(ell)) return false;
      return true;
    }
  }
  return false;
}

std::vector<EdgeFamilyId> classify_edge(const VertexCoords& u, const VertexCoords& v) {
  if (u.n() != v.n() || u.k() != v.k()) throw std::invalid_argument("endpoints use different (n, k)");
  if (u == v) throw std::invalid_argument("an edge needs two distinct endpoints");
  std::vector<EdgeFamilyId> result;
  for (const auto& family : all_families(u.k()))
    if (in_family(family, u.values(), v.values(), u.k())) result.push_back(family);
  return result;
}

std::string to_string(CoverMode mode) {
  switch (mode) {
    case CoverMode::partition: return "bp";
    case CoverMode::two_cover: return "bp2";
    case CoverMode::ordered: return "obp";
  }
  return "?";
}

}  // namespace obp

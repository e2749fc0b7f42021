#include "obp/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace obp {

namespace {

int leading_position(const EdgeFamilyId& family, int k) {
  return family.kind == FamilyKind::D ? family.j : k + family.i;
}

// Digits of one base-graph vertex, indexed like FamilyLayout::differ then ::equal.
struct BaseVertex {
  std::vector<int> digits;
  Vertex id = 0;
};

}  // namespace

FamilyLayout family_layout(const EdgeFamilyId& family, int k) {
  if (!family.valid_for(k)) throw std::invalid_argument("family " + to_string(family) + " is not defined for this k");
  FamilyLayout layout;
  switch (family.kind) {
    case FamilyKind::C:
      layout.differ = {k + family.i};
      for (int ell = 1; ell <= k - 1; ++ell) layout.equal.push_back(family.i + ell);
      break;
    case FamilyKind::D:
      layout.differ = {family.j};
      for (int ell = 0; ell <= k - 2; ++ell) layout.equal.push_back(wrapped_position(k, family.j, ell));
      break;
    case FamilyKind::E:
      layout.differ = {family.j, k + family.i};
      for (int ell = 1; ell <= family.j - 1; ++ell) layout.equal.push_back(ell);
      for (int ell = k + family.j; ell <= k + family.i - 1; ++ell) layout.equal.push_back(ell);
      break;
  }
  std::vector<bool> used(static_cast<std::size_t>(2 * k), false);
  for (int p : layout.differ) used[p] = true;
  for (int p : layout.equal) used[p] = true;
  for (int p = 1; p <= 2 * k - 1; ++p)
    if (!used[p]) layout.free.push_back(p);
  return layout;
}

StarOrdering default_ordering(const EdgeFamilyId& family, int k) {
  StarOrdering ordering;
  switch (family.kind) {
    case FamilyKind::C:
      for (int p = k + family.i; p >= family.i + 1; --p) ordering.significance.push_back(p);
      break;
    case FamilyKind::D:
      ordering.significance.push_back(family.j);
      for (int ell = k - 2; ell >= 0; --ell) ordering.significance.push_back(wrapped_position(k, family.j, ell));
      break;
    case FamilyKind::E:
      for (int p = k + family.i; p >= k + family.j; --p) ordering.significance.push_back(p);
      for (int p = family.j; p >= 1; --p) ordering.significance.push_back(p);
      ordering.direction = StarOrdering::Direction::descending;
      break;
  }
  return ordering;
}

void check_ordering(const StarOrdering& ordering, const EdgeFamilyId& family, int k) {
  const FamilyLayout layout = family_layout(family, k);
  if (ordering.significance.empty() || ordering.significance.front() != leading_position(family, k))
    throw std::invalid_argument("root ordering for " + to_string(family) + " must start with position " +
                                std::to_string(leading_position(family, k)));
  std::vector<int> seen;
  for (int p : ordering.significance) {
    const bool base = std::ranges::find(layout.differ, p) != layout.differ.end() ||
                      std::ranges::find(layout.equal, p) != layout.equal.end();
    if (!base) throw std::invalid_argument("position " + std::to_string(p) + " does not constrain " + to_string(family));
    if (std::ranges::find(seen, p) != seen.end()) throw std::invalid_argument("root ordering repeats a position");
    seen.push_back(p);
  }
}

std::vector<Biclique> build_family_bicliques(const EdgeFamilyId& family, int n, int k,
                                             const ConstructOptions& options) {
  const Vertex order = host_order(n, k, options.max_vertices);
  const FamilyLayout layout = family_layout(family, k);
  const StarOrdering ordering = options.ordering(family, k);
  check_ordering(ordering, family, k);

  std::vector<int> base = layout.differ;
  base.insert(base.end(), layout.equal.begin(), layout.equal.end());
  const std::size_t differ_count = layout.differ.size();

  // Base vertices, ids in mixed radix over `base` (first entry least significant).
  std::size_t base_count = 1;
  for (std::size_t t = 0; t < base.size(); ++t) base_count *= static_cast<std::size_t>(n);
  std::vector<BaseVertex> vertices(base_count);
  for (std::size_t id = 0; id < base_count; ++id) {
    auto& vertex = vertices[id];
    vertex.id = static_cast<Vertex>(id + 1);
    vertex.digits.resize(base.size());
    std::size_t rest = id;
    for (auto& digit : vertex.digits) {
      digit = static_cast<int>(rest % static_cast<std::size_t>(n)) + 1;
      rest /= static_cast<std::size_t>(n);
    }
  }

  // Sort key: significance positions first, then remaining base positions in position order.
  std::vector<std::size_t> key;
  for (int p : ordering.significance)
    key.push_back(static_cast<std::size_t>(std::ranges::find(base, p) - base.begin()));
  std::vector<std::size_t> tail(base.size());
  std::iota(tail.begin(), tail.end(), std::size_t{0});
  std::ranges::sort(tail, [&](std::size_t a, std::size_t b) { return base[a] < base[b]; });
  for (std::size_t slot : tail)
    if (std::ranges::find(key, slot) == key.end()) key.push_back(slot);

  const bool descending = ordering.direction == StarOrdering::Direction::descending;
  std::vector<Vertex> roots(base_count);
  std::iota(roots.begin(), roots.end(), Vertex{1});
  std::ranges::sort(roots, [&](Vertex a, Vertex b) {
    const auto& da = vertices[a - 1].digits;
    const auto& db = vertices[b - 1].digits;
    for (std::size_t slot : key)
      if (da[slot] != db[slot]) return descending ? da[slot] > db[slot] : da[slot] < db[slot];
    return false;
  });

  const auto adjacent = [&](Vertex a, Vertex b) {
    const auto& da = vertices[a - 1].digits;
    const auto& db = vertices[b - 1].digits;
    for (std::size_t slot = 0; slot < base.size(); ++slot) {
      const bool differs = da[slot] != db[slot];
      if (differs != (slot < differ_count)) return false;
    }
    return true;
  };
  const std::vector<Biclique> base_stars = star_partition(std::span<const Vertex>(roots), adjacent);

  // Blowup: every host vertex joins the group of its base projection.
  std::vector<std::vector<Vertex>> groups(base_count);
  for (Vertex x = 1; x <= order; ++x) {
    const VertexCoords coords = coords_of(x, n, k);
    std::size_t id = 0;
    for (auto it = base.rbegin(); it != base.rend(); ++it)
      id = id * static_cast<std::size_t>(n) + static_cast<std::size_t>(coords[*it] - 1);
    groups[id].push_back(x);
  }

  std::vector<Biclique> result;
  result.reserve(base_stars.size());
  for (const auto& star : base_stars) {
    std::vector<Vertex> first;
    for (Vertex b : star.first()) first.insert(first.end(), groups[b - 1].begin(), groups[b - 1].end());
    std::vector<Vertex> second;
    for (Vertex b : star.second()) second.insert(second.end(), groups[b - 1].begin(), groups[b - 1].end());
    result.emplace_back(std::move(first), std::move(second));
  }
  return result;
}

OrderedPartition build_partition(int n, int k, const ConstructOptions& options) {
  const Vertex order = host_order(n, k, options.max_vertices);
  std::vector<Biclique> bicliques;
  for (const auto& family : all_families(k)) {
    auto part = build_family_bicliques(family, n, k, options);
    bicliques.insert(bicliques.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return OrderedPartition(order, std::move(bicliques));
}

std::uint64_t predicted_size(int n, int k) {
  if (n < 2 || k < 1) throw std::invalid_argument("need n >= 2 and k >= 1");
  const auto power = [&](int e) {
    std::uint64_t r = 1;
    for (int t = 0; t < e; ++t) r *= static_cast<std::uint64_t>(n);
    return r;
  };
  const std::uint64_t step = static_cast<std::uint64_t>(n - 1);
  std::uint64_t total = static_cast<std::uint64_t>(2 * k - 1) * power(k - 1) * step;
  for (int i = 1; i <= k - 1; ++i) total += static_cast<std::uint64_t>(i) * power(i) * step;
  return total;
}

}  // namespace obp

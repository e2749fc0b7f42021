#include "obp/matrix.hpp"

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>

#include "obp/verify.hpp"

namespace obp {

FoolingSetClaim FoolingSetClaim::diagonal(Eigen::Index order, int z) {
  FoolingSetClaim claim;
  claim.z = z;
  for (Eigen::Index t = 1; t <= order; ++t) claim.cells.emplace_back(t, t);
  return claim;
}

BooleanMatrix partition_to_matrix(const OrderedPartition& partition) {
  const auto check = verify_ordered(partition);
  if (!check.pass) {
    const auto& first = check.report.violations.front();
    throw std::invalid_argument("not an ordered biclique partition: edge {" + std::to_string(first.u) + "," +
                                std::to_string(first.v) + "} is " + to_string(first.reason));
  }
  const auto order = static_cast<Eigen::Index>(partition.universe_size());
  BooleanMatrix m = BooleanMatrix::Zero(order, order);
  for (const auto& b : partition.bicliques())
    for (Vertex r : b.first())
      for (Vertex c : b.second()) m(r - 1, c - 1) += 1;
  return m;
}

namespace detail {

Eigen::Index rank_rational_impl(const DenseMatrix<long>& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(rows));
  for (Eigen::Index r = 0; r < rows; ++r) {
    a[r].reserve(static_cast<std::size_t>(cols));
    for (Eigen::Index c = 0; c < cols; ++c) a[r].emplace_back(m(r, c));
  }

  // Bareiss: after each pivot every entry below is a minor of the original matrix, so the
  // division by the previous pivot is exact.
  mpz_class previous = 1;
  mpz_class scratch;
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const auto& top = a[rank];
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      auto& row = a[r];
      const bool lead_zero = sgn(row[c]) == 0;
      for (Eigen::Index t = c + 1; t < cols; ++t) {
        mpz_mul(scratch.get_mpz_t(), top[c].get_mpz_t(), row[t].get_mpz_t());
        if (!lead_zero) mpz_submul(scratch.get_mpz_t(), row[c].get_mpz_t(), top[t].get_mpz_t());
        mpz_divexact(row[t].get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
      }
      row[c] = 0;
    }
    previous = top[c];
    ++rank;
  }
  return rank;
}

Eigen::Index rank_gf2_impl(const BooleanMatrix& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  const std::size_t words = static_cast<std::size_t>((cols + 63) / 64);
  std::vector<std::vector<std::uint64_t>> bits(static_cast<std::size_t>(rows), std::vector<std::uint64_t>(words, 0));
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      if (m(r, c) & 1U) bits[r][c / 64] |= std::uint64_t{1} << (c % 64);

  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    const std::size_t word = static_cast<std::size_t>(c / 64);
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    Eigen::Index pivot = rank;
    while (pivot < rows && !(bits[pivot][word] & mask)) ++pivot;
    if (pivot == rows) continue;
    std::swap(bits[pivot], bits[rank]);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (!(bits[r][word] & mask)) continue;
      for (std::size_t w = word; w < words; ++w) bits[r][w] ^= bits[rank][w];
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

bool verify_fooling_set(const BooleanMatrix& m, const FoolingSetClaim& claim) {
  for (const auto& [r, c] : claim.cells)
    if (r < 1 || r > m.rows() || c < 1 || c > m.cols()) throw std::out_of_range("fooling-set cell outside the matrix");
  const auto at = [&](Eigen::Index r, Eigen::Index c) { return static_cast<int>(m(r - 1, c - 1)); };
  for (const auto& [r, c] : claim.cells)
    if (at(r, c) != claim.z) return false;
  for (std::size_t s = 0; s < claim.cells.size(); ++s) {
    const auto [r1, c1] = claim.cells[s];
    for (std::size_t t = s + 1; t < claim.cells.size(); ++t) {
      const auto [r2, c2] = claim.cells[t];
      if (at(r1, c2) == claim.z && at(r2, c1) == claim.z) return false;
    }
  }
  return true;
}

GapReport gap_report(const OrderedPartition& partition) {
  const BooleanMatrix m = partition_to_matrix(partition);
  GapReport report;
  report.order = m.rows();
  report.bicliques = partition.size();
  report.rank_q = rank_rational(m);
  report.rank_gf2 = rank_gf2(m);
  if (static_cast<std::size_t>(report.rank_q) > report.bicliques)
    throw std::logic_error("rank over Q exceeds the number of rank-one summands");
  if (!verify_fooling_set(m, FoolingSetClaim::diagonal(report.order)))
    throw std::logic_error("diagonal is not a 0-fooling set");
  report.fool_lower_bound = report.order;
  if (report.fool_lower_bound > (report.rank_q + 1) * (report.rank_q + 1))
    throw std::logic_error("fooling set larger than (rank + 1)^2");
  if (report.rank_q >= 2)
    report.exponent = std::log(static_cast<double>(report.order)) / std::log(static_cast<double>(report.rank_q));
  return report;
}

}  // namespace obp

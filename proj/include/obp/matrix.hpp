#ifndef OBP_MATRIX_HPP
#define OBP_MATRIX_HPP

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "obp/core.hpp"

namespace obp {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Square 0/1 matrix.
using BooleanMatrix = DenseMatrix<std::uint8_t>;

enum class Field : std::uint8_t { rationals, gf2 };

/// Claimed fooling set. Cells are 1-based (row, column) pairs.
struct FoolingSetClaim {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> cells;
  int z = 0;

  static FoolingSetClaim diagonal(Eigen::Index order, int z = 0);
};

/// M = sum of A_b, A_b(r, c) = 1 iff r in first side and c in second side of biclique b.
/// Throws std::invalid_argument unless the partition verifies as ordered.
BooleanMatrix partition_to_matrix(const OrderedPartition& partition);

namespace detail {
Eigen::Index rank_rational_impl(const DenseMatrix<long>& m);
Eigen::Index rank_gf2_impl(const BooleanMatrix& m);
}  // namespace detail

/// Exact rank over Q by fraction-free (Bareiss) elimination on unbounded integers.
/// Entries must be integral.
template <typename Derived>
Eigen::Index rank_rational(const Eigen::MatrixBase<Derived>& m) {
  return detail::rank_rational_impl(m.template cast<long>());
}

/// Rank over GF(2) of the entries taken mod 2.
template <typename Derived>
Eigen::Index rank_gf2(const Eigen::MatrixBase<Derived>& m) {
  return detail::rank_gf2_impl(
      m.unaryExpr([](const auto& x) { return static_cast<std::uint8_t>(static_cast<long>(x) & 1L); }));
}

template <typename Derived>
Eigen::Index rank_exact(const Eigen::MatrixBase<Derived>& m, Field field) {
  return field == Field::gf2 ? rank_gf2(m) : rank_rational(m);
}

/// True iff every claimed cell equals z and every two cells have a cross entry different from z.
/// Throws std::out_of_range for a cell outside the matrix.
bool verify_fooling_set(const BooleanMatrix& m, const FoolingSetClaim& claim);

struct GapReport {
  Eigen::Index order = 0;          ///< N
  std::size_t bicliques = 0;       ///< m
  Eigen::Index rank_q = 0;
  Eigen::Index rank_gf2 = 0;
  Eigen::Index fool_lower_bound = 0;
  std::optional<double> exponent;  ///< ln N / ln rank_q, absent when rank_q < 2
};

/// Rank against fooling-set size for the matrix of an ordered partition. Throws std::logic_error if
/// rank_q > m, the diagonal fails as a 0-fooling set, or N > (rank_q + 1)^2.
GapReport gap_report(const OrderedPartition& partition);

}  // namespace obp

#endif  // OBP_MATRIX_HPP

// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_SPARSE_HPP
#define FRACSEMI_SPARSE_HPP

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace fracsemi
{

struct Triplet
{
  std::size_t row;
  std::size_t col;
  double      value;
};

/// Square matrix in compressed-row storage with sorted column indices.
/// Used for symmetric operators; symmetry is checked, not enforced.
class SparseSymMatrix
{
public:
  SparseSymMatrix() = default;

  /// Duplicate entries are summed.
  static SparseSymMatrix from_triplets(std::size_t n, std::vector<Triplet> entries);

  /// A (x) B with row index a * nB + b.
  static SparseSymMatrix kronecker(const SparseSymMatrix &A, const SparseSymMatrix &B);

  /// A (x) B + C (x) D with row index a * nB + b. A and C must share a
  /// dimension, as must B and D.
  static SparseSymMatrix kronecker_sum(const SparseSymMatrix &A, const SparseSymMatrix &B,
                                       const SparseSymMatrix &C, const SparseSymMatrix &D);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t nonzeros() const noexcept { return values_.size(); }

  std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
  std::span<const std::size_t> col_idx() const noexcept { return col_idx_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  /// Entry (i, j), zero when not stored.
  double at(std::size_t i, std::size_t j) const;

  /// Position of (i, i) in values().
  std::size_t diagonal_slot(std::size_t i) const;

  std::vector<double> diagonal() const;
  std::vector<double> row_sums() const;

  /// y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> operator*(std::span<const double> x) const;

  /// Keeps rows and columns listed in `keep` (strictly increasing).
  SparseSymMatrix submatrix(std::span<const std::size_t> keep) const;

  /// max |A_ij - A_ji| over stored entries, treating missing partners as 0.
  double asymmetry() const;

  /// "row col value" lines, 0-based, 17 significant digits.
  void write_triplets(std::ostream &os) const;

private:
  static SparseSymMatrix kronecker_impl(const SparseSymMatrix &A, const SparseSymMatrix &B,
                                        const SparseSymMatrix *C, const SparseSymMatrix *D);

  std::size_t              n_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> col_idx_;
  std::vector<double>      values_;
};

} // namespace fracsemi

#endif

// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/sparse.hpp"

#include "fracsemi/error.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <ostream>

namespace fracsemi
{

SparseSymMatrix
SparseSymMatrix::from_triplets(std::size_t n, std::vector<Triplet> entries)
{
  std::sort(entries.begin(), entries.end(), [](const Triplet &a, const Triplet &b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseSymMatrix m;
  m.n_ = n;
  m.row_ptr_.assign(n + 1, 0);
  const Triplet *prev = nullptr;
  for (const Triplet &t : entries)
    {
      if (t.row >= n || t.col >= n)
        throw InputError("triplet index out of range");
      if (prev && prev->row == t.row && prev->col == t.col)
        m.values_.back() += t.value;
      else
        {
          m.col_idx_.push_back(t.col);
          m.values_.push_back(t.value);
          ++m.row_ptr_[t.row + 1];
        }
      prev = &t;
    }
  for (std::size_t i = 1; i <= n; ++i)
    m.row_ptr_[i] += m.row_ptr_[i - 1];
  return m;
}

SparseSymMatrix
SparseSymMatrix::kronecker(const SparseSymMatrix &A, const SparseSymMatrix &B)
{
  return kronecker_impl(A, B, nullptr, nullptr);
}

SparseSymMatrix
SparseSymMatrix::kronecker_sum(const SparseSymMatrix &A, const SparseSymMatrix &B,
                               const SparseSymMatrix &C, const SparseSymMatrix &D)
{
  if (A.n_ != C.n_ || B.n_ != D.n_)
    throw InputError("kronecker_sum: factor dimensions differ");
  return kronecker_impl(A, B, &C, &D);
}

SparseSymMatrix
SparseSymMatrix::kronecker_impl(const SparseSymMatrix &A, const SparseSymMatrix &B,
                                const SparseSymMatrix *C, const SparseSymMatrix *D)
{
  const std::size_t nb = B.n_;
  SparseSymMatrix   m;
  m.n_ = A.n_ * nb;
  m.row_ptr_.assign(m.n_ + 1, 0);

  std::vector<std::pair<std::size_t, double>> row;
  for (std::size_t a = 0; a < A.n_; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      {
        row.clear();
        auto add = [&](const SparseSymMatrix &X, const SparseSymMatrix &Y) {
          for (std::size_t p = X.row_ptr_[a]; p < X.row_ptr_[a + 1]; ++p)
            for (std::size_t r = Y.row_ptr_[b]; r < Y.row_ptr_[b + 1]; ++r)
              row.emplace_back(X.col_idx_[p] * nb + Y.col_idx_[r], X.values_[p] * Y.values_[r]);
        };
        add(A, B);
        if (C != nullptr)
          add(*C, *D);
        std::sort(row.begin(), row.end(),
                  [](const auto &x, const auto &y) { return x.first < y.first; });
        const std::size_t row_start = m.col_idx_.size();
        for (const auto &[col, value] : row)
          {
            if (m.col_idx_.size() > row_start && m.col_idx_.back() == col)
              m.values_.back() += value;
            else
              {
                m.col_idx_.push_back(col);
                m.values_.push_back(value);
              }
          }
        m.row_ptr_[a * nb + b + 1] = m.col_idx_.size();
      }
  return m;
}

double
SparseSymMatrix::at(std::size_t i, std::size_t j) const
{
  const auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
  const auto last  = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
  const auto it    = std::lower_bound(first, last, j);
  if (it == last || *it != j)
    return 0.0;
  return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

std::size_t
SparseSymMatrix::diagonal_slot(std::size_t i) const
{
  const auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
  const auto last  = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
  const auto it    = std::lower_bound(first, last, i);
  if (it == last || *it != i)
    throw InputError("matrix has no stored diagonal entry");
  return static_cast<std::size_t>(it - col_idx_.begin());
}

std::vector<double>
SparseSymMatrix::diagonal() const
{
  std::vector<double> d(n_);
  for (std::size_t i = 0; i < n_; ++i)
    d[i] = at(i, i);
  return d;
}

std::vector<double>
SparseSymMatrix::row_sums() const
{
  std::vector<double> s(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
      s[i] += values_[p];
  return s;
}

void
SparseSymMatrix::multiply(std::span<const double> x, std::span<double> y) const
{
  for (std::size_t i = 0; i < n_; ++i)
    {
      double sum = 0.0;
      for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
        sum += values_[p] * x[col_idx_[p]];
      y[i] = sum;
    }
}

std::vector<double>
SparseSymMatrix::operator*(std::span<const double> x) const
{
  std::vector<double> y(n_);
  multiply(x, y);
  return y;
}

SparseSymMatrix
SparseSymMatrix::submatrix(std::span<const std::size_t> keep) const
{
  constexpr std::size_t dropped = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(n_, dropped);
  for (std::size_t k = 0; k < keep.size(); ++k)
    map[keep[k]] = k;

  SparseSymMatrix m;
  m.n_ = keep.size();
  m.row_ptr_.assign(m.n_ + 1, 0);
  for (std::size_t k = 0; k < keep.size(); ++k)
    {
      const std::size_t i = keep[k];
      for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
        if (map[col_idx_[p]] != dropped)
          {
            m.col_idx_.push_back(map[col_idx_[p]]);
            m.values_.push_back(values_[p]);
          }
      m.row_ptr_[k + 1] = m.col_idx_.size();
    }
  return m;
}

double
SparseSymMatrix::asymmetry() const
{
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
      worst = std::max(worst, std::abs(values_[p] - at(col_idx_[p], i)));
  return worst;
}

void
SparseSymMatrix::write_triplets(std::ostream &os) const
{
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
      fmt::print(os, "{} {} {:.17g}\n", i, col_idx_[p], values_[p]);
}

} // namespace fracsemi

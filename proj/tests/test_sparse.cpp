// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/error.hpp"
#include "fracsemi/sparse.hpp"

#include <gtest/gtest.h>
#include <random>
#include <sstream>

using namespace fracsemi;

namespace
{
SparseSymMatrix
tridiag(std::size_t n, double d, double o)
{
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n; ++i)
    {
      t.push_back({i, i, d});
      if (i + 1 < n)
        {
          t.push_back({i, i + 1, o});
          t.push_back({i + 1, i, o});
        }
    }
  return SparseSymMatrix::from_triplets(n, t);
}

std::vector<double>
dense(const SparseSymMatrix &A)
{
  const std::size_t   n = A.dimension();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i * n + j] = A.at(i, j);
  return out;
}
} // namespace

TEST(Sparse, DuplicatesAreSummed)
{
  const auto A = SparseSymMatrix::from_triplets(2, {{0, 0, 1.0}, {0, 0, 2.0}, {1, 0, 0.5}, {0, 1, 0.5}, {1, 1, 4.0}});
  EXPECT_EQ(A.nonzeros(), 4u);
  EXPECT_DOUBLE_EQ(A.at(0, 0), 3.0);
  EXPECT_DOUBLE_EQ(A.at(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(A.at(1, 1), 4.0);
  EXPECT_THROW(SparseSymMatrix::from_triplets(2, {{2, 0, 1.0}}), InputError);
}

TEST(Sparse, MultiplyAndRowSums)
{
  const auto A = tridiag(4, 2.0, -1.0);
  const std::vector<double> x{1.0, 1.0, 1.0, 1.0};
  const auto                y = A * x;
  EXPECT_EQ(y, (std::vector<double>{1.0, 0.0, 0.0, 1.0}));
  EXPECT_EQ(A.row_sums(), y);
  EXPECT_EQ(A.diagonal(), (std::vector<double>(4, 2.0)));
  EXPECT_EQ(A.asymmetry(), 0.0);
}

TEST(Sparse, KroneckerMatchesDense)
{
  const auto A = tridiag(3, 2.0, -1.0);
  const auto B = tridiag(4, 4.0, 1.0);
  const auto C = tridiag(3, 1.0, 0.25);
  const auto D = tridiag(4, 3.0, -0.5);
  const auto K = SparseSymMatrix::kronecker_sum(A, B, C, D);
  const auto P = SparseSymMatrix::kronecker(A, B);
  ASSERT_EQ(K.dimension(), 12u);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j)
      {
        const std::size_t a = i / 4, b = i % 4, c = j / 4, d = j % 4;
        EXPECT_DOUBLE_EQ(K.at(i, j), A.at(a, c) * B.at(b, d) + C.at(a, c) * D.at(b, d));
        EXPECT_DOUBLE_EQ(P.at(i, j), A.at(a, c) * B.at(b, d));
      }
  EXPECT_THROW(SparseSymMatrix::kronecker_sum(A, B, D, C), InputError);
}

TEST(Sparse, Submatrix)
{
  const auto                     A    = tridiag(5, 2.0, -1.0);
  const std::vector<std::size_t> keep{1, 2, 3};
  const auto                     S = A.submatrix(keep);
  EXPECT_EQ(dense(S), dense(tridiag(3, 2.0, -1.0)));
}

TEST(Sparse, TripletDump)
{
  const auto A = SparseSymMatrix::from_triplets(2, {{0, 0, 0.1}, {1, 1, 2.0 / 3.0}});
  std::ostringstream os;
  A.write_triplets(os);
  EXPECT_EQ(os.str(), "0 0 0.10000000000000001\n1 1 0.66666666666666663\n");
}

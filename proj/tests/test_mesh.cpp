// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/error.hpp"
#include "fracsemi/mesh.hpp"

#include <cmath>
#include <gtest/gtest.h>

using namespace fracsemi;

TEST(GradedMesh, Quadratic)
{
  const auto m = graded_mesh(4, 2.0, 1.0);
  const std::vector<double> expected{0.0, 0.0625, 0.25, 0.5625, 1.0};
  EXPECT_EQ(m.nodes, expected);
}

TEST(GradedMesh, Uniform)
{
  const auto m = graded_mesh(4, 1.0, 2.0);
  const std::vector<double> expected{0.0, 0.5, 1.0, 1.5, 2.0};
  EXPECT_EQ(m.nodes, expected);
}

TEST(GradedMesh, GradedTowardZero)
{
  const double gamma = 3.0 / (2.0 * 0.4) * 1.1;
  const auto   m     = graded_mesh(8, gamma, 1.0);
  for (int k = 0; k < 8; ++k)
    {
      EXPECT_LT(m.nodes[k], m.nodes[k + 1]);
      EXPECT_EQ(m.nodes[k], std::pow(double(k) / 8.0, gamma) * 1.0);
    }
  EXPECT_LT(m.cell_size(0), m.cell_size(7));
  EXPECT_EQ(m.nodes.back(), 1.0);
}

TEST(GradedMesh, Validation)
{
  EXPECT_THROW(graded_mesh(1, 2.0, 1.0), ParameterError);
  EXPECT_THROW(graded_mesh(4, 0.5, 1.0), ParameterError);
  EXPECT_THROW(graded_mesh(4, 2.0, 0.0), ParameterError);
}

TEST(BaseMesh, Counts)
{
  const auto b = base_mesh(2, 4);
  EXPECT_EQ(b.cells(), 16u);
  EXPECT_EQ(b.interior_nodes(), 9u);
  EXPECT_DOUBLE_EQ(b.h(), 0.25);
  EXPECT_EQ(base_mesh(1, 4).interior_nodes(), 3u);
  EXPECT_THROW(base_mesh(3, 4), ParameterError);
  EXPECT_THROW(base_mesh(2, 1), ParameterError);
}

TEST(Defaults, GammaAboveThreshold)
{
  for (double s : {0.1, 0.2, 0.4, 0.6, 0.8, 0.99})
    EXPECT_GT(default_gamma(s), grading_threshold(s));
}

TEST(Defaults, TruncationGrowsWithLogM)
{
  for (double s : {0.2, 0.8})
    {
      double prev = 0.0;
      for (int M : {4, 8, 16, 32, 64})
        {
          const double Y = default_truncation(2, s, M);
          EXPECT_GE(Y, 1.0);
          EXPECT_GT(Y, prev);
          prev = Y;
        }
    }
}

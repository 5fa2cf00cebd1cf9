// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/error.hpp"
#include "fracsemi/nodal_field.hpp"
#include "fracsemi/quadrature.hpp"

#include <cmath>
#include <gtest/gtest.h>

using namespace fracsemi;

TEST(GaussLegendre, IntegratesMonomialsExactly)
{
  for (int n = 1; n <= 5; ++n)
    {
      const auto rule = gauss_legendre(n);
      ASSERT_EQ(rule.nodes.size(), std::size_t(n));
      for (int k = 0; k < 2 * n; ++k)
        {
          double sum = 0.0;
          for (int i = 0; i < n; ++i)
            sum += rule.weights[i] * std::pow(rule.nodes[i], k);
          EXPECT_NEAR(sum, 1.0 / (k + 1), 1e-15) << n << " points, degree " << k;
        }
    }
}

TEST(GaussLegendre, RejectsUnsupportedOrder)
{
  EXPECT_THROW(gauss_legendre(0), ParameterError);
  EXPECT_THROW(gauss_legendre(6), ParameterError);
}

TEST(QuadraturePoints, WeightsSumToArea)
{
  for (int dim : {1, 2})
    {
      double sum   = 0.0;
      int    count = 0;
      for_each_quadrature_point(dim, 5, 3, [&](const QuadraturePoint &qp) {
        sum += qp.weight;
        ++count;
      });
      EXPECT_NEAR(sum, 1.0, 1e-14);
      EXPECT_EQ(count, dim == 2 ? 225 : 15);
    }
}

TEST(NodalField, LayoutIsFirstIndexFastest)
{
  const auto u = NodalField::sample(2, 4, [](double x, double y) { return x + 10.0 * y; });
  EXPECT_EQ(u.size(), 25u);
  EXPECT_DOUBLE_EQ(u.values()[1], 0.25);
  EXPECT_DOUBLE_EQ(u.values()[5], 2.5);
  EXPECT_DOUBLE_EQ(u.at(3, 2), 0.75 + 5.0);
}

TEST(NodalField, InterpolationReproducesBilinear)
{
  auto       fn = [](double x, double y) { return 1.0 + 2.0 * x - y + 3.0 * x * y; };
  const auto u  = NodalField::sample(2, 3, fn);
  for_each_quadrature_point(2, 3, 3, [&](const QuadraturePoint &qp) {
    EXPECT_NEAR(u.interpolate(qp), fn(qp.x1, qp.x2), 1e-14);
  });
}

TEST(NodalField, Validation)
{
  EXPECT_THROW(NodalField(3, 4), ParameterError);
  EXPECT_THROW(NodalField(2, 0), ParameterError);
  EXPECT_THROW(NodalField(1, 4, std::vector<double>(3)), InputError);
  NodalField u(1, 2);
  EXPECT_TRUE(u.all_finite());
  u.at(1) = std::nan("");
  EXPECT_FALSE(u.all_finite());
}

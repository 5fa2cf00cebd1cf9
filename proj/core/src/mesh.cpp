// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/mesh.hpp"

#include "fracsemi/error.hpp"

#include <cmath>
#include <numbers>

namespace fracsemi
{

GradedMesh1D
graded_mesh(int M, double gamma, double Y)
{
  if (M < 2)
    throw ParameterError("graded mesh needs M >= 2 intervals");
  if (!(gamma >= 1.0))
    throw ParameterError("grading exponent must be >= 1");
  if (!(Y > 0.0))
    throw ParameterError("truncation height must be positive");

  GradedMesh1D mesh{M, gamma, Y, std::vector<double>(static_cast<std::size_t>(M) + 1)};
  for (int k = 0; k <= M; ++k)
    {
      const double t = static_cast<double>(k) / static_cast<double>(M);
      mesh.nodes[k]  = std::pow(t, gamma) * Y;
    }
  return mesh;
}

BaseMesh
base_mesh(int dim, int divisions)
{
  if (dim != 1 && dim != 2)
    throw ParameterError("base mesh dimension must be 1 or 2");
  if (divisions < 2)
    throw ParameterError("base mesh needs at least 2 divisions per side");
  return {dim, divisions};
}

double
default_gamma(double s)
{
  return 1.1 * grading_threshold(s);
}

double
default_truncation(int dim, double s, int M)
{
  const double lambda1 = (dim == 2 ? 2.0 : 1.0) * std::numbers::pi * std::numbers::pi;
  return std::max(1.0, 2.0 * (1.0 + s) / std::sqrt(lambda1) * std::log(M + 1.0));
}

} // namespace fracsemi

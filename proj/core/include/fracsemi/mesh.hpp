// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_MESH_HPP
#define FRACSEMI_MESH_HPP

#include <cstddef>
#include <vector>

namespace fracsemi
{

/// Partition of [0, Y] with nodes y_k = (k/M)^gamma Y.
struct GradedMesh1D
{
  int                 M;
  double              gamma;
  double              Y;
  std::vector<double> nodes;

  double cell_size(int k) const { return nodes[k + 1] - nodes[k]; }
};

/// Throws ParameterError for M < 2, gamma < 1 or Y <= 0.
GradedMesh1D graded_mesh(int M, double gamma, double Y);

/// Uniform structured grid of (0,1)^dim with M cells per side.
struct BaseMesh
{
  int dim;
  int divisions;

  double h() const noexcept { return 1.0 / divisions; }
  std::size_t cells() const noexcept
  {
    const auto m = static_cast<std::size_t>(divisions);
    return dim == 2 ? m * m : m;
  }
  std::size_t interior_nodes() const noexcept
  {
    const auto m = static_cast<std::size_t>(divisions - 1);
    return dim == 2 ? m * m : m;
  }
};

/// Throws ParameterError for dim outside {1,2} or divisions < 2.
BaseMesh base_mesh(int dim, int divisions);

/// Smallest admissible grading is strictly above this value.
inline double
grading_threshold(double s)
{
  return 3.0 / (2.0 * s);
}

/// 1.1 * 3/(2s).
double default_gamma(double s);

/// max(1, 2(1+s)/sqrt(lambda_1) * ln(M+1)), lambda_1 the first Dirichlet
/// eigenvalue of the unit interval or square.
double default_truncation(int dim, double s, int M);

} // namespace fracsemi

#endif

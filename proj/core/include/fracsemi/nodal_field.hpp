// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_NODAL_FIELD_HPP
#define FRACSEMI_NODAL_FIELD_HPP

#include "fracsemi/quadrature.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace fracsemi
{

/// Scalar function on the unit interval or square. For dim == 1 the second
/// argument is ignored.
using ScalarField = std::function<double(double, double)>;

/// Nodal values on the (M+1)^dim tensor grid of (0,1)^dim, x1 running
/// fastest. Represents the continuous multilinear interpolant.
class NodalField
{
public:
  NodalField(int dim, int divisions);
  NodalField(int dim, int divisions, std::vector<double> values);

  /// Samples `fn` at every grid node.
  static NodalField sample(int dim, int divisions, const ScalarField &fn);

  int dim() const noexcept { return dim_; }
  int divisions() const noexcept { return divisions_; }
  int nodes_per_side() const noexcept { return divisions_ + 1; }
  double h() const noexcept { return 1.0 / divisions_; }

  std::size_t size() const noexcept { return values_.size(); }
  std::vector<double> &values() noexcept { return values_; }
  const std::vector<double> &values() const noexcept { return values_; }

  double &at(int i1, int i2 = 0) { return values_[index(i1, i2)]; }
  double at(int i1, int i2 = 0) const { return values_[index(i1, i2)]; }

  std::size_t index(int i1, int i2 = 0) const noexcept
  {
    return static_cast<std::size_t>(i1) +
           static_cast<std::size_t>(i2) * static_cast<std::size_t>(divisions_ + 1);
  }

  /// Multilinear interpolant evaluated at a quadrature point of the same grid.
  double interpolate(const QuadraturePoint &qp) const noexcept;

  double max_abs() const noexcept;
  bool all_finite() const noexcept;
  bool same_grid(const NodalField &other) const noexcept
  {
    return dim_ == other.dim_ && divisions_ == other.divisions_;
  }

private:
  int                 dim_;
  int                 divisions_;
  std::vector<double> values_;
};

} // namespace fracsemi

#endif

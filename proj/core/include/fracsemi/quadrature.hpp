// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_QUADRATURE_HPP
#define FRACSEMI_QUADRATURE_HPP

#include <array>
#include <span>

namespace fracsemi
{

/// Gauss-Legendre rule mapped to [0,1]; supports 1 to 5 points.
struct GaussRule
{
  std::span<const double> nodes;
  std::span<const double> weights;
};

GaussRule gauss_legendre(int points);

/// One tensor Gauss point of a uniform structured grid on (0,1)^dim.
/// For dim == 1 the second coordinate is zero and cell2 is zero.
struct QuadraturePoint
{
  double x1;
  double x2;
  double weight;
  int    cell1;
  int    cell2;
  double xi;
  double eta;
};

/// Calls fn(const QuadraturePoint&) for every tensor Gauss point of every
/// cell of the uniform grid with `divisions` cells per side. Weights include
/// the cell measure h^dim.
template <class Fn>
void
for_each_quadrature_point(int dim, int divisions, int points, Fn &&fn)
{
  const GaussRule rule = gauss_legendre(points);
  const double    h    = 1.0 / divisions;
  const int       n2   = dim == 2 ? divisions : 1;
  const int       p2   = dim == 2 ? points : 1;
  for (int c2 = 0; c2 < n2; ++c2)
    for (int c1 = 0; c1 < divisions; ++c1)
      for (int j = 0; j < p2; ++j)
        for (int i = 0; i < points; ++i)
          {
            QuadraturePoint qp;
            qp.cell1 = c1;
            qp.cell2 = c2;
            qp.xi    = rule.nodes[i];
            qp.eta   = dim == 2 ? rule.nodes[j] : 0.0;
            qp.x1    = (c1 + qp.xi) * h;
            qp.x2    = dim == 2 ? (c2 + qp.eta) * h : 0.0;
            qp.weight =
              rule.weights[i] * h * (dim == 2 ? rule.weights[j] * h : 1.0);
            fn(qp);
          }
}

} // namespace fracsemi

#endif

// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_TESTS_ORACLES_HPP
#define FRACSEMI_TESTS_ORACLES_HPP

#include "fracsemi/mesh.hpp"

#include <array>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <vector>

namespace fracsemi::oracles
{

using Dense = std::vector<std::vector<double>>;

/// Unweighted trilinear stiffness on x1, x2 uniform with M divisions and the
/// given y nodes, assembled element by element with 2-point Gauss per axis.
/// Free nodes are interior in x and below the top layer, numbered layer by
/// layer in y with x1 fastest.
inline Dense
classical_q1_stiffness(int M, const std::vector<double> &ys)
{
  const int    My = static_cast<int>(ys.size()) - 1;
  const int    m1 = M - 1;
  const int    n  = m1 * m1 * My;
  const double h  = 1.0 / M;
  Dense        K(n, std::vector<double>(n, 0.0));

  const double g[2]   = {0.5 - 0.5 / std::sqrt(3.0), 0.5 + 0.5 / std::sqrt(3.0)};
  auto         shape  = [](int a, double t) { return a == 0 ? 1.0 - t : t; };
  auto         dshape = [](int a) { return a == 0 ? -1.0 : 1.0; };
  auto         free_index = [&](int i1, int i2, int k) -> int {
    if (i1 <= 0 || i1 >= M || i2 <= 0 || i2 >= M || k >= My)
      return -1;
    return k * m1 * m1 + (i1 - 1) + (i2 - 1) * m1;
  };

  for (int k = 0; k < My; ++k)
    for (int c2 = 0; c2 < M; ++c2)
      for (int c1 = 0; c1 < M; ++c1)
        {
          const double                         hy = ys[k + 1] - ys[k];
          std::array<std::array<double, 8>, 8> ke{};
          for (double gx : g)
            for (double gy : g)
              for (double gz : g)
                {
                  const double                          w = 0.125 * h * h * hy;
                  std::array<std::array<double, 3>, 8> grad;
                  for (int a = 0; a < 8; ++a)
                    {
                      const int a1 = a & 1, a2 = (a >> 1) & 1, a3 = (a >> 2) & 1;
                      grad[a] = {dshape(a1) / h * shape(a2, gy) * shape(a3, gz),
                                 shape(a1, gx) * dshape(a2) / h * shape(a3, gz),
                                 shape(a1, gx) * shape(a2, gy) * dshape(a3) / hy};
                    }
                  for (int a = 0; a < 8; ++a)
                    for (int b = 0; b < 8; ++b)
                      ke[a][b] += w * (grad[a][0] * grad[b][0] + grad[a][1] * grad[b][1] +
                                       grad[a][2] * grad[b][2]);
                }
          for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b)
              {
                const int ia = free_index(c1 + (a & 1), c2 + ((a >> 1) & 1), k + ((a >> 2) & 1));
                const int ib = free_index(c1 + (b & 1), c2 + ((b >> 1) & 1), k + ((b >> 2) & 1));
                if (ia >= 0 && ib >= 0)
                  K[ia][ib] += ke[a][b];
              }
        }
  return K;
}

struct YReference
{
  Dense mass;
  Dense stiffness;
};

/// Weighted hat-function products over all nodes of a 1-D mesh by adaptive
/// tanh-sinh quadrature on each cell.
inline YReference
y_quadrature_reference(const GradedMesh1D &mesh, double alpha)
{
  const int                                  n = mesh.M + 1;
  YReference                                 ref{Dense(n, std::vector<double>(n, 0.0)),
                 Dense(n, std::vector<double>(n, 0.0))};
  boost::math::quadrature::tanh_sinh<double> ts;
  for (int k = 0; k < mesh.M; ++k)
    {
      const double a = mesh.nodes[k], b = mesh.nodes[k + 1], h = b - a;
      auto         w     = [=](double t) { return std::pow(t, alpha); };
      auto         left  = [=](double t) { return (b - t) / h; };
      auto         right = [=](double t) { return (t - a) / h; };
      const double ll = ts.integrate([&](double t) { return w(t) * left(t) * left(t); }, a, b);
      const double lr = ts.integrate([&](double t) { return w(t) * left(t) * right(t); }, a, b);
      const double rr = ts.integrate([&](double t) { return w(t) * right(t) * right(t); }, a, b);
      const double m0 = ts.integrate(w, a, b) / (h * h);
      ref.mass[k][k] += ll;
      ref.mass[k][k + 1] += lr;
      ref.mass[k + 1][k] += lr;
      ref.mass[k + 1][k + 1] += rr;
      ref.stiffness[k][k] += m0;
      ref.stiffness[k][k + 1] -= m0;
      ref.stiffness[k + 1][k] -= m0;
      ref.stiffness[k + 1][k + 1] += m0;
    }
  return ref;
}

} // namespace fracsemi::oracles

#endif

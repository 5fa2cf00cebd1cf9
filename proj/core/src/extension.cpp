// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/extension.hpp"

#include "fracsemi/error.hpp"
#include "fracsemi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fracsemi::extension
{

double
weighted_moment(double a, double b, double alpha, int j)
{
  const double p = 1.0 + alpha + j;
  return (std::pow(b, p) - std::pow(a, p)) / p;
}

FactorPair
y_matrices(const GradedMesh1D &mesh, double alpha)
{
  if (!(alpha > -1.0 && alpha < 1.0))
    throw ParameterError("weight exponent alpha must lie in (-1,1)");

  const std::size_t    n = mesh.nodes.size();
  std::vector<Triplet> mass, stiff;
  mass.reserve(4 * n);
  stiff.reserve(4 * n);
  for (int k = 0; k < mesh.M; ++k)
    {
      const double a  = mesh.nodes[k];
      const double b  = mesh.nodes[k + 1];
      const double h  = b - a;
      const double m0 = weighted_moment(a, b, alpha, 0);
      const double m1 = weighted_moment(a, b, alpha, 1);
      const double m2 = weighted_moment(a, b, alpha, 2);

      // psi_left = (b - y)/h, psi_right = (y - a)/h
      const double h2 = h * h;
      const double ll = (b * b * m0 - 2.0 * b * m1 + m2) / h2;
      const double lr = (-a * b * m0 + (a + b) * m1 - m2) / h2;
      const double rr = (a * a * m0 - 2.0 * a * m1 + m2) / h2;
      const double st = m0 / h2;

      const auto i = static_cast<std::size_t>(k);
      mass.insert(mass.end(), {{i, i, ll}, {i, i + 1, lr}, {i + 1, i, lr}, {i + 1, i + 1, rr}});
      stiff.insert(stiff.end(), {{i, i, st}, {i, i + 1, -st}, {i + 1, i, -st}, {i + 1, i + 1, st}});
    }
  return {SparseSymMatrix::from_triplets(n, std::move(mass)),
          SparseSymMatrix::from_triplets(n, std::move(stiff))};
}

namespace
{
FactorPair
uniform_1d(int divisions, Boundary boundary)
{
  const double         h = 1.0 / divisions;
  const std::size_t    n = static_cast<std::size_t>(divisions) + 1;
  std::vector<Triplet> mass, stiff;
  for (std::size_t k = 0; k + 1 < n; ++k)
    {
      mass.insert(mass.end(), {{k, k, h / 3.0}, {k, k + 1, h / 6.0}, {k + 1, k, h / 6.0},
                               {k + 1, k + 1, h / 3.0}});
      stiff.insert(stiff.end(), {{k, k, 1.0 / h}, {k, k + 1, -1.0 / h}, {k + 1, k, -1.0 / h},
                                 {k + 1, k + 1, 1.0 / h}});
    }
  FactorPair full{SparseSymMatrix::from_triplets(n, std::move(mass)),
                  SparseSymMatrix::from_triplets(n, std::move(stiff))};
  if (boundary == Boundary::Keep)
    return full;

  std::vector<std::size_t> interior(n - 2);
  std::iota(interior.begin(), interior.end(), std::size_t{1});
  return {full.mass.submatrix(interior), full.stiffness.submatrix(interior)};
}
} // namespace

FactorPair
omega_matrices(const BaseMesh &mesh, Boundary boundary)
{
  if (mesh.dim != 1 && mesh.dim != 2)
    throw ParameterError("base mesh dimension must be 1 or 2");
  FactorPair one = uniform_1d(mesh.divisions, boundary);
  if (mesh.dim == 1)
    return one;

  // index = i1 + n * i2, so the x2 factor is the outer one
  return {SparseSymMatrix::kronecker(one.mass, one.mass),
          SparseSymMatrix::kronecker_sum(one.mass, one.stiffness, one.stiffness, one.mass)};
}

CylinderSystem
assemble_system(const BaseMesh &base, const GradedMesh1D &graded, const FractionalParams &p)
{
  if (!(graded.gamma > grading_threshold(p.s)))
    throw GradingError("grading exponent " + std::to_string(graded.gamma) +
                       " must exceed 3/(2s) = " + std::to_string(grading_threshold(p.s)));

  FactorPair omega = omega_matrices(base, Boundary::Eliminate);
  FactorPair yfull = y_matrices(graded, p.alpha);

  std::vector<std::size_t> layers(static_cast<std::size_t>(graded.M));
  std::iota(layers.begin(), layers.end(), std::size_t{0});

  CylinderSystem sys{p,
                     base,
                     graded,
                     {},
                     yfull.mass.submatrix(layers),
                     yfull.stiffness.submatrix(layers),
                     std::move(omega.mass),
                     std::move(omega.stiffness),
                     {},
                     base.interior_nodes(),
                     layers.size()};
  sys.K = SparseSymMatrix::kronecker_sum(sys.mass_y, sys.stiffness_omega, sys.stiffness_y,
                                         sys.mass_omega);
  // row sums before elimination, so boundary neighbours keep their full hat integral
  const auto full_sums = omega_matrices(base, Boundary::Keep).mass.row_sums();
  const int  m         = base.divisions;
  sys.mass_omega_lumped.reserve(sys.n_omega);
  for (int i2 = base.dim == 2 ? 1 : 0; i2 < (base.dim == 2 ? m : 1); ++i2)
    for (int i1 = 1; i1 < m; ++i1)
      sys.mass_omega_lumped.push_back(full_sums[i1 + (m + 1) * i2]);
  return sys;
}

std::vector<double>
assemble_load(const ScalarField &g, const CylinderSystem &sys)
{
  const int           dim = sys.base.dim;
  const int           M   = sys.base.divisions;
  const auto          m1  = static_cast<std::size_t>(M - 1);
  std::vector<double> load(sys.dofs(), 0.0);

  // interior index of grid node (i1, i2), or npos on the boundary
  auto interior = [&](int i1, int i2) -> std::ptrdiff_t {
    if (i1 <= 0 || i1 >= M)
      return -1;
    if (dim == 1)
      return i1 - 1;
    if (i2 <= 0 || i2 >= M)
      return -1;
    return static_cast<std::ptrdiff_t>((i1 - 1) + m1 * static_cast<std::size_t>(i2 - 1));
  };

  for_each_quadrature_point(dim, M, 2, [&](const QuadraturePoint &qp) {
    const double gw = sys.params.d_s * g(qp.x1, qp.x2) * qp.weight;
    const double a[2] = {1.0 - qp.xi, qp.xi};
    const double c[2] = {1.0 - qp.eta, qp.eta};
    const int    n2   = dim == 2 ? 2 : 1;
    for (int dj = 0; dj < n2; ++dj)
      for (int di = 0; di < 2; ++di)
        {
          const auto idx = interior(qp.cell1 + di, qp.cell2 + dj);
          if (idx < 0)
            continue;
          load[static_cast<std::size_t>(idx)] += gw * a[di] * (dim == 2 ? c[dj] : 1.0);
        }
  });
  return load;
}

NodalField
trace_field(std::span<const double> U, const CylinderSystem &sys)
{
  const int  dim = sys.base.dim;
  const int  M   = sys.base.divisions;
  NodalField field(dim, M);
  if (dim == 1)
    for (int i = 1; i < M; ++i)
      field.at(i) = U[sys.trace_index(static_cast<std::size_t>(i - 1))];
  else
    for (int j = 1; j < M; ++j)
      for (int i = 1; i < M; ++i)
        field.at(i, j) = U[sys.trace_index(static_cast<std::size_t>((i - 1) + (M - 1) * (j - 1)))];
  return field;
}

TraceErrors
trace_errors(std::span<const double> U, const CylinderSystem &sys, const ScalarField &exact_u,
             int k_max)
{
  const NodalField trace = trace_field(U, sys);
  const int        dim   = sys.base.dim;
  const int        M     = sys.base.divisions;

  double l2 = 0.0;
  for_each_quadrature_point(dim, M, 3, [&](const QuadraturePoint &qp) {
    const double e = trace.interpolate(qp) - exact_u(qp.x1, qp.x2);
    l2 += qp.weight * e * e;
  });

  NodalField error = trace;
  const double h   = 1.0 / M;
  const int    n2  = dim == 2 ? M : 1;
  for (int j = (dim == 2 ? 1 : 0); j < n2; ++j)
    for (int i = 1; i < M; ++i)
      error.at(i, j) -= exact_u(i * h, dim == 2 ? j * h : 0.0);

  const int  cutoff   = k_max > 0 ? k_max : 2 * M;
  const auto err_coef = spectral::analyze(error, cutoff, spectral::Projection::Interpolant);

  // energy error: u from a nodal sine transform on an oversampled grid,
  // U(.,0) through its interpolant coefficients
  const auto u_coef =
    spectral::analyze(NodalField::sample(dim, 4 * cutoff, exact_u), cutoff, spectral::Projection::Nodal);
  const auto h_coef = spectral::analyze(trace, cutoff, spectral::Projection::Interpolant);

  const double s   = sys.params.s;
  double       uu  = 0.0;
  double       uh  = 0.0;
  u_coef.for_each_mode([&](int k1, int k2, std::size_t i) {
    const double w = std::pow(spectral::eigenvalue(k1, k2, dim), s) * u_coef.coeffs()[i];
    uu += w * u_coef.coeffs()[i];
    uh += w * h_coef.coeffs()[i];
  });
  const auto KU = sys.K * U;
  double     hh = 0.0;
  for (std::size_t i = 0; i < KU.size(); ++i)
    hh += KU[i] * U[i];
  const double energy_sq = sys.params.d_s * (uu - 2.0 * uh) + hh;

  TraceErrors out;
  out.l2       = std::sqrt(l2);
  out.hs       = std::sqrt(std::max(0.0, energy_sq) / sys.params.d_s);
  out.hs_nodal = spectral::sobolev_norm(err_coef, s);
  return out;
}

} // namespace fracsemi::extension

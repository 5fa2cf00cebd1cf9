// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_EXTENSION_HPP
#define FRACSEMI_EXTENSION_HPP

#include "fracsemi/mesh.hpp"
#include "fracsemi/nodal_field.hpp"
#include "fracsemi/params.hpp"
#include "fracsemi/sparse.hpp"

#include <span>
#include <vector>

namespace fracsemi::extension
{

/// Integral of y^{alpha + j} over [a, b], a >= 0.
double weighted_moment(double a, double b, double alpha, int j);

struct FactorPair
{
  SparseSymMatrix mass;
  SparseSymMatrix stiffness;
};

/// Weighted 1-D mass (integral y^alpha psi_k psi_l) and stiffness
/// (integral y^alpha psi_k' psi_l') over all M+1 nodes of the graded mesh,
/// integrated exactly through weighted moments.
FactorPair y_matrices(const GradedMesh1D &mesh, double alpha);

enum class Boundary
{
  Keep,
  Eliminate,
};

/// Q1 mass and stiffness of the base mesh. With Boundary::Eliminate only
/// interior nodes remain, ordered x1 fastest.
FactorPair omega_matrices(const BaseMesh &mesh, Boundary boundary = Boundary::Eliminate);

/// Discrete extension problem on the truncated cylinder Omega x (0, Y).
///
/// Unknowns are ordered layer by layer in y: index = k * n_omega + i with
/// k = 0..M-1 the free y-layers (the y = Y layer is Dirichlet) and i the
/// interior node of the base mesh. The trace y = 0 therefore occupies the
/// first n_omega entries. The stiffness is
///   K = M_y (x) S_omega + S_y (x) M_omega.
struct CylinderSystem
{
  FractionalParams params;
  BaseMesh         base;
  GradedMesh1D     graded;

  SparseSymMatrix K;
  SparseSymMatrix mass_y;
  SparseSymMatrix stiffness_y;
  SparseSymMatrix mass_omega;
  SparseSymMatrix stiffness_omega;
  /// Row sums of the base mass matrix before boundary elimination, i.e. the
  /// integrals of the interior hat functions.
  std::vector<double> mass_omega_lumped;

  std::size_t n_omega;
  std::size_t n_layers;

  std::size_t dofs() const noexcept { return K.dimension(); }

  /// Free index of the trace node with interior index i.
  std::size_t trace_index(std::size_t i) const noexcept { return i; }
};

/// Throws GradingError when gamma <= 3/(2s).
CylinderSystem assemble_system(const BaseMesh &base, const GradedMesh1D &graded,
                               const FractionalParams &p);

/// d_s * integral g phi_i on trace nodes (2-point tensor Gauss per cell),
/// zero on the remaining layers.
std::vector<double> assemble_load(const ScalarField &g, const CylinderSystem &sys);

/// Trace values of U on the full base grid, boundary nodes zero.
NodalField trace_field(std::span<const double> U, const CylinderSystem &sys);

struct TraceErrors
{
  /// ||u - U(.,0)||_{L2}, 3-point tensor Gauss per cell.
  double l2;
  /// d_s^{-1/2} ||grad(U_exact - U)||_{L2(y^alpha, C)}, the extension energy
  /// error in H^s units. By the trace inequality it bounds
  /// ||u - U(.,0)||_{H^s} from above.
  double hs;
  /// H^s norm of the sine expansion of the nodal error field U(.,0) - u at
  /// the grid nodes. Misses the interpolation error of u and superconverges.
  double hs_nodal;
};

/// Error norms of a discrete extension solution against the exact solution
/// u of the fractional problem. The energy error is evaluated through
///   ||grad(U_exact - U)||^2 = d_s ||u||_{H^s}^2 - 2 d_s <(-Delta)^s u, U(.,0)> + U^T K U,
/// valid for any U in the discrete space, with u expanded in k_max sine modes
/// (u must be resolved by them). k_max = 0 selects 2 * divisions.
TraceErrors trace_errors(std::span<const double> U, const CylinderSystem &sys,
                         const ScalarField &exact_u, int k_max = 0);

} // namespace fracsemi::extension

#endif

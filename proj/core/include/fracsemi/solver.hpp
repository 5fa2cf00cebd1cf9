// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_SOLVER_HPP
#define FRACSEMI_SOLVER_HPP

#include "fracsemi/extension.hpp"
#include "fracsemi/params.hpp"
#include "fracsemi/sparse.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fracsemi::solver
{

enum class Preconditioner
{
  None,
  Jacobi,
};

struct PcgResult
{
  std::vector<double> x;
  int                 iterations;
  double              relative_residual;
};

/// Preconditioned conjugate gradients for SPD A, stopping once the
/// recursively updated residual satisfies ||r|| <= tol ||rhs||. The cap is
/// 10 * dimension iterations; exceeding it throws ConvergenceError.
PcgResult pcg(const SparseSymMatrix &A, std::span<const double> rhs, double tol,
              Preconditioner precond = Preconditioner::Jacobi);

/// R(U) = K U + d_s T^* M_lump f(T U) - load.
std::vector<double> residual(const extension::CylinderSystem &sys, std::span<const double> U,
                             const PowerNonlinearity &nl, std::span<const double> load);

/// J(U) = K + d_s T^* M_lump diag(f'(T U)) T.
SparseSymMatrix jacobian(const extension::CylinderSystem &sys, std::span<const double> U,
                         const PowerNonlinearity &nl);

struct NewtonOptions
{
  double         tolerance      = 1e-10;
  int            max_iterations = 50;
  /// Relative PCG tolerance; zero selects tolerance / 10.
  double         inner_tolerance = 0.0;
  Preconditioner precond        = Preconditioner::Jacobi;
  /// Defaults to the solution of the linear problem (f omitted).
  std::optional<std::vector<double>> initial_guess;
};

struct SolveReport
{
  std::vector<double> solution;
  int                 newton_iters = 0;
  /// ||R||_2 at the initial guess and after every Newton step.
  std::vector<double> residual_history;
  int                 cg_iters_total = 0;
  bool                converged      = false;
};

/// Newton's method with PCG inner solves (relative tolerance tol/10 unless
/// overridden).
/// Stops when ||R||_2 <= tol or ||delta||_2 / max(1, ||U||_2) <= tol.
/// Non-convergence is reported through SolveReport::converged.
SolveReport newton_solve(const extension::CylinderSystem &sys, const PowerNonlinearity &nl,
                         std::span<const double> load, const NewtonOptions &opts = {});

/// Linear solve K U~ = d_s <g - f(u), phi> for the intermediate problem.
std::vector<double> solve_intermediate(const extension::CylinderSystem &sys,
                                       const ScalarField &g_minus_fu, double tol);

} // namespace fracsemi::solver

#endif

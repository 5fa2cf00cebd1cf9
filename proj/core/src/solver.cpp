// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/solver.hpp"

#include "fracsemi/error.hpp"

#include <algorithm>
#include <cmath>

namespace fracsemi::solver
{

namespace
{
double
dot(std::span<const double> a, std::span<const double> b)
{
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

double
norm2(std::span<const double> a)
{
  return std::sqrt(dot(a, a));
}
} // namespace

PcgResult
pcg(const SparseSymMatrix &A, std::span<const double> rhs, double tol, Preconditioner precond)
{
  if (!(tol > 0.0))
    throw ParameterError("pcg tolerance must be positive");
  const std::size_t n = A.dimension();
  if (rhs.size() != n)
    throw InputError("pcg: right-hand side has the wrong length");

  PcgResult out{std::vector<double>(n, 0.0), 0, 0.0};
  const double rhs_norm = norm2(rhs);
  if (rhs_norm == 0.0)
    return out;

  std::vector<double> inv_diag(n, 1.0);
  if (precond == Preconditioner::Jacobi)
    {
      const auto d = A.diagonal();
      for (std::size_t i = 0; i < n; ++i)
        inv_diag[i] = d[i] != 0.0 ? 1.0 / d[i] : 1.0;
    }

  std::vector<double> r(rhs.begin(), rhs.end()), z(n), p(n), Ap(n);
  for (std::size_t i = 0; i < n; ++i)
    z[i] = inv_diag[i] * r[i];
  p         = z;
  double rz = dot(r, z);

  const int cap = static_cast<int>(10 * n);
  double    rel = 1.0;
  for (int it = 1; it <= cap; ++it)
    {
      A.multiply(p, Ap);
      const double alpha = rz / dot(p, Ap);
      for (std::size_t i = 0; i < n; ++i)
        {
          out.x[i] += alpha * p[i];
          r[i] -= alpha * Ap[i];
        }
      rel = norm2(r) / rhs_norm;
      if (rel <= tol)
        {
          out.iterations        = it;
          out.relative_residual = rel;
          return out;
        }
      for (std::size_t i = 0; i < n; ++i)
        z[i] = inv_diag[i] * r[i];
      const double rz_new = dot(r, z);
      const double beta   = rz_new / rz;
      rz                  = rz_new;
      for (std::size_t i = 0; i < n; ++i)
        p[i] = z[i] + beta * p[i];
    }
  throw ConvergenceError("pcg exceeded its iteration cap", rel);
}

std::vector<double>
residual(const extension::CylinderSystem &sys, std::span<const double> U,
         const PowerNonlinearity &nl, std::span<const double> load)
{
  if (U.size() != sys.dofs() || load.size() != sys.dofs())
    throw InputError("residual: vector length does not match the system");
  std::vector<double> R = sys.K * U;
  const double        ds = sys.params.d_s;
  for (std::size_t i = 0; i < sys.n_omega; ++i)
    {
      const std::size_t t = sys.trace_index(i);
      R[t] += ds * sys.mass_omega_lumped[i] * nl.f(U[t]);
    }
  for (std::size_t i = 0; i < R.size(); ++i)
    R[i] -= load[i];
  return R;
}

SparseSymMatrix
jacobian(const extension::CylinderSystem &sys, std::span<const double> U,
         const PowerNonlinearity &nl)
{
  SparseSymMatrix J  = sys.K;
  auto            v  = J.values();
  const double    ds = sys.params.d_s;
  for (std::size_t i = 0; i < sys.n_omega; ++i)
    {
      const std::size_t t = sys.trace_index(i);
      v[J.diagonal_slot(t)] += ds * sys.mass_omega_lumped[i] * nl.f_prime(U[t]);
    }
  return J;
}

SolveReport
newton_solve(const extension::CylinderSystem &sys, const PowerNonlinearity &nl,
             std::span<const double> load, const NewtonOptions &opts)
{
  if (!(opts.tolerance > 0.0))
    throw ParameterError("Newton tolerance must be positive");
  const double inner_tol =
    opts.inner_tolerance > 0.0 ? opts.inner_tolerance : opts.tolerance / 10.0;

  SolveReport report;
  if (opts.initial_guess)
    {
      if (opts.initial_guess->size() != sys.dofs())
        throw InputError("initial guess has the wrong length");
      report.solution = *opts.initial_guess;
    }
  else
    {
      PcgResult lin = pcg(sys.K, load, inner_tol, opts.precond);
      report.solution = std::move(lin.x);
      report.cg_iters_total += lin.iterations;
    }

  std::vector<double> &U = report.solution;
  std::vector<double>  R = residual(sys, U, nl, load);
  report.residual_history.push_back(norm2(R));
  if (report.residual_history.back() <= opts.tolerance)
    {
      report.converged = true;
      return report;
    }

  for (int it = 1; it <= opts.max_iterations; ++it)
    {
      for (double &r : R)
        r = -r;
      PcgResult step = pcg(jacobian(sys, U, nl), R, inner_tol, opts.precond);
      report.cg_iters_total += step.iterations;
      for (std::size_t i = 0; i < U.size(); ++i)
        U[i] += step.x[i];
      report.newton_iters = it;

      R = residual(sys, U, nl, load);
      report.residual_history.push_back(norm2(R));
      const double rel_step = norm2(step.x) / std::max(1.0, norm2(U));
      if (report.residual_history.back() <= opts.tolerance || rel_step <= opts.tolerance)
        {
          report.converged = true;
          return report;
        }
    }
  return report;
}

std::vector<double>
solve_intermediate(const extension::CylinderSystem &sys, const ScalarField &g_minus_fu, double tol)
{
  const auto load = extension::assemble_load(g_minus_fu, sys);
  return pcg(sys.K, load, tol).x;
}

} // namespace fracsemi::solver

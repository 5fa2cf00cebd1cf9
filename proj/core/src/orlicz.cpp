// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/orlicz.hpp"

#include "fracsemi/error.hpp"

#include <cmath>

namespace fracsemi::orlicz
{

namespace
{
constexpr double modular_tolerance = 1e-10;
constexpr int    max_bisections    = 200;

double
bisect_norm(const NodalField &u, const NFunction &phi, double k_hi)
{
  auto modular = [&](double k) {
    return integrate_modular(u, [&](double t) { return phi(t / k); });
  };

  while (modular(k_hi) > 1.0)
    k_hi *= 2.0;
  double k_lo = 1e-300;

  double k = k_hi;
  for (int it = 0; it < max_bisections; ++it)
    {
      // geometric midpoint while the bracket spans orders of magnitude
      k = k_hi / k_lo > 4.0 ? std::sqrt(k_lo * k_hi) : 0.5 * (k_lo + k_hi);
      const double value = modular(k);
      if (std::abs(value - 1.0) <= modular_tolerance)
        return k;
      if (value > 1.0)
        k_lo = k;
      else
        k_hi = k;
    }
  return k;
}
} // namespace

double
integrate_modular(const NodalField &u, const NFunction &phi, int points)
{
  double sum = 0.0;
  for_each_quadrature_point(u.dim(), u.divisions(), points, [&](const QuadraturePoint &qp) {
    sum += qp.weight * phi(u.interpolate(qp));
  });
  return sum;
}

double
luxemburg_norm(const NodalField &u, const NFunction &phi)
{
  if (!u.all_finite())
    throw InputError("luxemburg_norm: field has non-finite values");
  const double umax = u.max_abs();
  if (umax == 0.0)
    return 0.0;
  return bisect_norm(u, phi, std::max(1.0, 2.0 * umax));
}

double
luxemburg_norm(const NodalField &u, const PowerNonlinearity &nl)
{
  if (!u.all_finite())
    throw InputError("luxemburg_norm: field has non-finite values");
  const double umax = u.max_abs();
  if (umax == 0.0)
    return 0.0;
  // |Omega| = 1 on the unit cube
  return bisect_norm(u, [&](double t) { return nl.F(t); }, std::max(1.0, 2.0 * umax));
}

double
conjugate_luxemburg_norm(const NodalField &u, const PowerNonlinearity &nl)
{
  return luxemburg_norm(u, [&](double t) { return nl.F_tilde(t); });
}

Delta2Constants
delta2_constants(const PowerNonlinearity &nl)
{
  const double q = nl.q();
  return {1.0 / (q + 1.0), q / (q + 1.0)};
}

double
holder_ratio(const NodalField &u, const NodalField &v, const PowerNonlinearity &nl)
{
  if (!u.same_grid(v))
    throw InputError("holder_ratio: fields live on different grids");

  const double norm_u = luxemburg_norm(u, nl);
  const double norm_v = conjugate_luxemburg_norm(v, nl);
  if (norm_u == 0.0 || norm_v == 0.0)
    return 0.0;

  double uv = 0.0;
  for_each_quadrature_point(u.dim(), u.divisions(), 2, [&](const QuadraturePoint &qp) {
    uv += qp.weight * u.interpolate(qp) * v.interpolate(qp);
  });
  return std::abs(uv) / (2.0 * norm_u * norm_v);
}

ConjugateIntegrals
conjugate_integrability_check(const NodalField &u, const PowerNonlinearity &nl)
{
  if (!u.all_finite())
    throw InputError("conjugate_integrability_check: field has non-finite values");
  ConjugateIntegrals out{0.0, 0.0};
  for_each_quadrature_point(u.dim(), u.divisions(), 2, [&](const QuadraturePoint &qp) {
    const double t = u.interpolate(qp);
    out.F_of_u += qp.weight * nl.F(t);
    out.F_tilde_of_f_of_u += qp.weight * nl.F_tilde(nl.f(t));
  });
  return out;
}

} // namespace fracsemi::orlicz

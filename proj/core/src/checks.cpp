// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/checks.hpp"

#include "fracsemi/extension.hpp"
#include "fracsemi/orlicz.hpp"
#include "fracsemi/params.hpp"
#include "fracsemi/solver.hpp"
#include "fracsemi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <random>

namespace fracsemi::checks
{

namespace
{
NodalField
random_field(std::mt19937_64 &rng, int dim, int divisions, double scale)
{
  std::uniform_real_distribution<double> dist(-scale, scale);
  NodalField                             u(dim, divisions);
  for (double &v : u.values())
    v = dist(rng);
  return u;
}

spectral::SpectralField
random_band_limited(std::mt19937_64 &rng, int dim, int k_max, int band, double scale)
{
  std::uniform_real_distribution<double> dist(-scale, scale);
  spectral::SpectralField                g(dim, k_max);
  g.for_each_mode([&](int k1, int k2, std::size_t i) {
    if (k1 <= band && (dim == 1 || k2 <= band))
      g.coeffs()[i] = dist(rng);
  });
  return g;
}
} // namespace

std::vector<CheckResult>
run_property_suite(std::uint64_t seed)
{
  std::mt19937_64          rng(seed);
  std::vector<CheckResult> out;
  auto record = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };

  std::uniform_real_distribution<double> unit(0.0, 1.0);

  {
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i)
      {
        const PowerNonlinearity nl(0.1 + 5.0 * unit(rng), 1.0 + 4.0 * unit(rng));
        const double            t   = 20.0 * (unit(rng) - 0.5);
        const double            lhs = t * nl.f(t);
        const double            rhs = (nl.q() + 1.0) * nl.F(t);
        if (rhs > 0.0)
          worst = std::max(worst, std::abs(lhs - rhs) / rhs);
      }
    record("t f(t) = (q+1) F(t)", worst <= 1e-12, fmt::format("max rel err {:.3e}", worst));
  }

  {
    bool ok = true;
    for (int i = 0; i < 10000 && ok; ++i)
      {
        const PowerNonlinearity nl(0.1 + 5.0 * unit(rng), 1.0 + 4.0 * unit(rng));
        const double            t   = 10.0 * unit(rng);
        const double            tau = 10.0 * unit(rng);
        ok = t * tau <= nl.F(t) + nl.F_tilde(tau) + 1e-12 * (1.0 + t * tau);
      }
    record("Young inequality t tau <= F(t) + F~(tau)", ok, "10000 samples");
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i)
      {
        const PowerNonlinearity nl(0.5 + 2.0 * unit(rng), 1.0 + 3.0 * unit(rng));
        const auto u = random_field(rng, 2, 6, 3.0);
        const auto v = random_field(rng, 2, 6, 3.0);
        worst        = std::max(worst, orlicz::holder_ratio(u, v, nl));
      }
    record("Hoelder ratio <= 1", worst <= 1.0 + 1e-8, fmt::format("max ratio {:.6f}", worst));
  }

  {
    const PowerNonlinearity nl(1.0, 3.0);
    const auto              u    = random_field(rng, 2, 8, 2.0);
    const double            base = orlicz::luxemburg_norm(u, nl);
    double                  worst = 0.0;
    for (double c : {-3.0, 0.25, 7.0})
      {
        NodalField cu = u;
        for (double &x : cu.values())
          x *= c;
        worst = std::max(worst, std::abs(orlicz::luxemburg_norm(cu, nl) - std::abs(c) * base) /
                                  (std::abs(c) * base));
      }
    record("Luxemburg norm homogeneity", worst <= 1e-8, fmt::format("max rel err {:.3e}", worst));
  }

  {
    const PowerNonlinearity nl(2.0, 1.0);
    NodalField              one = NodalField::sample(2, 4, [](double, double) { return 1.0; });
    const double            n   = orlicz::luxemburg_norm(one, nl);
    record("Luxemburg norm of 1 for F = t^2", std::abs(n - 1.0) <= 1e-8,
           fmt::format("norm {:.12f}", n));
  }

  {
    const auto   p  = fractional_params(0.5);
    const double d1 = fractional_params(0.01).d_s;
    record("d_s(1/2) = 1 and d_s > 0", std::abs(p.d_s - 1.0) <= 1e-14 && d1 > 0.0,
           fmt::format("d_s(1/2) = {:.17g}", p.d_s));
  }

  {
    const auto              p  = fractional_params(0.3);
    const PowerNonlinearity nl(1.0, 3.0);
    double                  worst_stab = -1.0, worst_id = 0.0;
    for (int i = 0; i < 10; ++i)
      {
        const auto g   = random_band_limited(rng, 2, 12, 3, 2.0);
        const auto sol = spectral::solve_semilinear_spectral(g, p, nl);
        worst_stab = std::max(worst_stab, spectral::sobolev_norm(sol.u, p.s) -
                                            spectral::sobolev_norm(g, -p.s));
        // H^{2s} identity against the projected data
        const auto u_nodal = spectral::synthesize(sol.u, 48);
        NodalField fu      = u_nodal;
        for (double &x : fu.values())
          x = nl.f(x);
        const auto fu_c = spectral::analyze(fu, 12, spectral::Projection::Nodal);
        spectral::SpectralField r(2, 12);
        for (std::size_t k = 0; k < r.size(); ++k)
          r.coeffs()[k] = g.coeffs()[k] - fu_c.coeffs()[k];
        const double lhs = spectral::sobolev_norm(sol.u, 2.0 * p.s);
        const double rhs = spectral::sobolev_norm(r, 0.0);
        worst_id         = std::max(worst_id, std::abs(lhs - rhs) / rhs);
      }
    record("spectral stability ||u||_s <= ||g||_{-s}", worst_stab <= 1e-10,
           fmt::format("max excess {:.3e}", worst_stab));
    record("spectral H^{2s} identity (projected)", worst_id <= 1e-8,
           fmt::format("max rel err {:.3e}", worst_id));
  }

  {
    const auto p   = fractional_params(0.4);
    const auto sys = extension::assemble_system(base_mesh(2, 6), graded_mesh(6, default_gamma(0.4), 1.5), p);
    std::normal_distribution<double> normal;
    double                           min_rq = 1e300;
    for (int i = 0; i < 100; ++i)
      {
        std::vector<double> x(sys.dofs());
        for (double &v : x)
          v = normal(rng);
        const auto Kx = sys.K * x;
        double     xKx = 0.0, xx = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k)
          {
            xKx += x[k] * Kx[k];
            xx += x[k] * x[k];
          }
        min_rq = std::min(min_rq, xKx / xx);
      }
    record("extension stiffness symmetric", sys.K.asymmetry() <= 1e-14,
           fmt::format("asymmetry {:.3e}", sys.K.asymmetry()));
    record("extension stiffness positive", min_rq > 0.0, fmt::format("min Rayleigh {:.3e}", min_rq));

    const PowerNonlinearity nl(1.0, 3.0);
    std::vector<double>     U(sys.dofs()), v(sys.dofs()), zero(sys.dofs(), 0.0);
    for (std::size_t k = 0; k < U.size(); ++k)
      {
        U[k] = normal(rng);
        v[k] = normal(rng);
      }
    const auto   J  = solver::jacobian(sys, U, nl);
    const auto   Jv = J * v;
    const auto   R0 = solver::residual(sys, U, nl, zero);
    const double eps = 1e-5;
    std::vector<double> Ue = U;
    for (std::size_t k = 0; k < U.size(); ++k)
      Ue[k] += eps * v[k];
    const auto R1  = solver::residual(sys, Ue, nl, zero);
    double     num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < U.size(); ++k)
      {
        const double d = (R1[k] - R0[k]) / eps - Jv[k];
        num += d * d;
        den += Jv[k] * Jv[k];
      }
    const double rel = std::sqrt(num / den);
    record("Newton Jacobian vs finite difference", rel <= 1e-4, fmt::format("rel err {:.3e}", rel));
  }

  return out;
}

} // namespace fracsemi::checks

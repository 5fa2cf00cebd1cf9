// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/spectral.hpp"

#include "fracsemi/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fracsemi::spectral
{

namespace
{
constexpr double pi = std::numbers::pi;

/// sin(pi * r / n) for integer r, reduced so that nodes on the boundary and
/// symmetric pairs come out exact.
double
sin_pi_ratio(long r, long n)
{
  r %= 2 * n;
  double sign = 1.0;
  if (r >= n)
    {
      r -= n;
      sign = -1.0;
    }
  if (r == 0)
    return 0.0;
  if (2 * r > n)
    r = n - r;
  return sign * std::sin(pi * static_cast<double>(r) / static_cast<double>(n));
}

/// table[(k-1) * (n+1) + j] = sin(k pi j / n), k = 1..k_max, j = 0..n
std::vector<double>
sine_table(int k_max, int n)
{
  std::vector<double> t(static_cast<std::size_t>(k_max) * (n + 1));
  for (int k = 1; k <= k_max; ++k)
    for (int j = 0; j <= n; ++j)
      t[static_cast<std::size_t>(k - 1) * (n + 1) + j] =
        sin_pi_ratio(static_cast<long>(k) * j, n);
  return t;
}

/// Per-mode factor w_k in c_k = w_k sum_j v_j sin(k pi x_j).
std::vector<double>
projection_weights(int k_max, int n, Projection proj)
{
  std::vector<double> w(static_cast<std::size_t>(k_max));
  const double        h = 1.0 / n;
  for (int k = 1; k <= k_max; ++k)
    {
      double sigma = h;
      if (proj == Projection::Interpolant)
        {
          // integral of the hat function against sin(k pi x), divided by
          // sin(k pi x_j): 2 (1 - cos(k pi h)) / ((k pi)^2 h)
          const double half = 0.5 * k * pi * h;
          const double sinc = std::sin(half) / half;
          sigma             = h * sinc * sinc;
        }
      w[k - 1] = std::numbers::sqrt2 * sigma;
    }
  return w;
}

/// Sine-transforms a (n+1)^dim nodal array into k_max^dim coefficients.
std::vector<double>
forward_transform(int dim, int n, const std::vector<double> &values, int k_max,
                  const std::vector<double> &weights)
{
  const auto   table = sine_table(k_max, n);
  const auto   side  = static_cast<std::size_t>(n + 1);
  auto         S     = [&](int k, int j) { return table[static_cast<std::size_t>(k - 1) * side + j]; };
  const auto   K     = static_cast<std::size_t>(k_max);

  if (dim == 1)
    {
      std::vector<double> c(K, 0.0);
      for (int k = 1; k <= k_max; ++k)
        {
          double sum = 0.0;
          for (int j = 1; j < n; ++j)
            sum += values[j] * S(k, j);
          c[k - 1] = weights[k - 1] * sum;
        }
      return c;
    }

  // rows first: tmp[k1 + K * j2]
  std::vector<double> tmp(K * side, 0.0);
  for (int j2 = 1; j2 < n; ++j2)
    for (int k1 = 1; k1 <= k_max; ++k1)
      {
        double sum = 0.0;
        for (int j1 = 1; j1 < n; ++j1)
          sum += values[j1 + side * j2] * S(k1, j1);
        tmp[(k1 - 1) + K * j2] = sum;
      }

  std::vector<double> c(K * K, 0.0);
  for (int k2 = 1; k2 <= k_max; ++k2)
    for (int k1 = 1; k1 <= k_max; ++k1)
      {
        double sum = 0.0;
        for (int j2 = 1; j2 < n; ++j2)
          sum += tmp[(k1 - 1) + K * j2] * S(k2, j2);
        c[(k1 - 1) + K * (k2 - 1)] = weights[k1 - 1] * weights[k2 - 1] * sum;
      }
  return c;
}

std::vector<double>
inverse_transform(int dim, int n, const std::vector<double> &coeffs, int k_max)
{
  const auto table = sine_table(k_max, n);
  const auto side  = static_cast<std::size_t>(n + 1);
  auto       S     = [&](int k, int j) { return table[static_cast<std::size_t>(k - 1) * side + j]; };
  const auto K     = static_cast<std::size_t>(k_max);
  const double r2  = std::numbers::sqrt2;

  if (dim == 1)
    {
      std::vector<double> v(side, 0.0);
      for (int j = 1; j < n; ++j)
        {
          double sum = 0.0;
          for (int k = 1; k <= k_max; ++k)
            sum += coeffs[k - 1] * S(k, j);
          v[j] = r2 * sum;
        }
      return v;
    }

  // tmp[k1 + K * j2] = sum_k2 c[k1,k2] sin(k2 pi x_j2)
  std::vector<double> tmp(K * side, 0.0);
  for (int j2 = 1; j2 < n; ++j2)
    for (int k1 = 1; k1 <= k_max; ++k1)
      {
        double sum = 0.0;
        for (int k2 = 1; k2 <= k_max; ++k2)
          sum += coeffs[(k1 - 1) + K * (k2 - 1)] * S(k2, j2);
        tmp[(k1 - 1) + K * j2] = sum;
      }

  std::vector<double> v(side * side, 0.0);
  for (int j2 = 1; j2 < n; ++j2)
    for (int j1 = 1; j1 < n; ++j1)
      {
        double sum = 0.0;
        for (int k1 = 1; k1 <= k_max; ++k1)
          sum += tmp[(k1 - 1) + K * j2] * S(k1, j1);
        v[j1 + side * j2] = 2.0 * sum;
      }
  return v;
}

void
check_dim(int dim)
{
  if (dim != 1 && dim != 2)
    throw ParameterError("spectral fields support dim 1 or 2");
}
} // namespace

SpectralField::SpectralField(int dim, int k_max)
  : dim_(dim), k_max_(k_max)
{
  check_dim(dim);
  if (k_max < 1)
    throw ParameterError("k_max must be at least 1");
  const auto K = static_cast<std::size_t>(k_max);
  coeffs_.assign(dim == 2 ? K * K : K, 0.0);
}

SpectralField::SpectralField(int dim, int k_max, std::vector<double> coeffs)
  : SpectralField(dim, k_max)
{
  if (coeffs.size() != coeffs_.size())
    throw InputError("SpectralField coefficient count does not match k_max^dim");
  coeffs_ = std::move(coeffs);
}

double
SpectralField::lambda(std::size_t flat) const noexcept
{
  const auto K  = static_cast<std::size_t>(k_max_);
  const int  k1 = static_cast<int>(flat % K) + 1;
  const int  k2 = dim_ == 2 ? static_cast<int>(flat / K) + 1 : 0;
  return eigenvalue(k1, k2, dim_);
}

double
eigenvalue(int k1, int k2, int dim)
{
  const double kk = dim == 2 ? double(k1) * k1 + double(k2) * k2 : double(k1) * k1;
  return pi * pi * kk;
}

Eigenpair
eigenpair(std::array<int, 2> k, int dim)
{
  check_dim(dim);
  if (k[0] < 1 || (dim == 2 && k[1] < 1))
    throw ParameterError("eigenpair indices must be >= 1");

  const int k1 = k[0];
  const int k2 = dim == 2 ? k[1] : 0;
  Eigenpair e;
  e.lambda = eigenvalue(k1, k2, dim);
  if (dim == 1)
    e.phi = [k1](double x, double) { return std::numbers::sqrt2 * std::sin(k1 * pi * x); };
  else
    e.phi = [k1, k2](double x1, double x2) {
      return 2.0 * std::sin(k1 * pi * x1) * std::sin(k2 * pi * x2);
    };
  return e;
}

SpectralField
analyze(const NodalField &u, int k_max, Projection proj)
{
  const int n = u.divisions();
  if (k_max < 1)
    throw ParameterError("k_max must be at least 1");
  if (proj == Projection::Interpolant && k_max > 2 * n)
    throw ResolutionError("k_max " + std::to_string(k_max) + " exceeds twice the grid divisions " +
                          std::to_string(n));
  if (proj == Projection::Nodal && k_max >= n)
    throw ResolutionError("nodal sine transform needs k_max < divisions");

  const auto w = projection_weights(k_max, n, proj);
  return SpectralField(u.dim(), k_max, forward_transform(u.dim(), n, u.values(), k_max, w));
}

NodalField
synthesize(const SpectralField &c, int divisions)
{
  if (divisions < 1)
    throw ParameterError("synthesize needs at least one division");
  return NodalField(c.dim(), divisions, inverse_transform(c.dim(), divisions, c.coeffs(), c.k_max()));
}

double
sobolev_norm(const SpectralField &c, double sigma)
{
  double sum = 0.0;
  c.for_each_mode([&](int k1, int k2, std::size_t i) {
    const double v = c.coeffs()[i];
    sum += std::pow(eigenvalue(k1, k2, c.dim()), sigma) * v * v;
  });
  return std::sqrt(sum);
}

std::vector<double>
sobolev_partial_sums(const SpectralField &c, double sigma)
{
  std::vector<double> shell(static_cast<std::size_t>(c.k_max()), 0.0);
  c.for_each_mode([&](int k1, int k2, std::size_t i) {
    const double v = c.coeffs()[i];
    const int    s = c.dim() == 2 ? std::max(k1, k2) : k1;
    shell[s - 1] += std::pow(eigenvalue(k1, k2, c.dim()), sigma) * v * v;
  });
  for (std::size_t i = 1; i < shell.size(); ++i)
    shell[i] += shell[i - 1];
  return shell;
}

SpectralField
solve_linear_spectral(const SpectralField &g, const FractionalParams &p)
{
  SpectralField u(g.dim(), g.k_max());
  g.for_each_mode([&](int k1, int k2, std::size_t i) {
    u.coeffs()[i] = std::pow(eigenvalue(k1, k2, g.dim()), -p.s) * g.coeffs()[i];
  });
  return u;
}

SpectralSolution
solve_semilinear_spectral(const SpectralField &g, const FractionalParams &p,
                          const PowerNonlinearity &nl, const PicardOptions &opts)
{
  const int    dim  = g.dim();
  const int    K    = g.k_max();
  const int    n    = std::max(opts.oversampling, 2) * K;
  const double lmin = eigenvalue(1, 1, dim);
  const double lmin_pow = std::pow(lmin, -p.s);

  std::vector<double> scale(g.size());
  g.for_each_mode([&](int k1, int k2, std::size_t i) {
    scale[i] = std::pow(eigenvalue(k1, k2, dim), -p.s);
  });
  const auto nodal_w = projection_weights(K, n, Projection::Nodal);

  SpectralField u = solve_linear_spectral(g, p);
  if (nl.is_disabled())
    return {u, 1, 0.0};

  std::vector<double> next(g.size());
  double              res = 0.0;
  for (int it = 1; it <= opts.max_iterations; ++it)
    {
      // f(u) on the quadrature grid, then back to coefficients
      std::vector<double> vals = inverse_transform(dim, n, u.coeffs(), K);
      double              umax = 0.0;
      for (double &v : vals)
        {
          umax = std::max(umax, std::abs(v));
          v    = nl.f(v);
        }
      const std::vector<double> fu = forward_transform(dim, n, vals, K, nodal_w);

      double sq = 0.0;
      for (std::size_t i = 0; i < next.size(); ++i)
        {
          next[i]       = scale[i] * (g.coeffs()[i] - fu[i]);
          const double d = next[i] - u.coeffs()[i];
          sq += d * d;
        }
      res = std::sqrt(sq);
      if (res <= opts.tolerance)
        {
          u.coeffs() = next;
          return {u, it, res};
        }

      const double lip   = nl.q() * nl.b() * std::pow(umax, nl.q() - 1.0) * lmin_pow;
      const double omega = 2.0 / (2.0 + lip);
      for (std::size_t i = 0; i < next.size(); ++i)
        u.coeffs()[i] += omega * (next[i] - u.coeffs()[i]);
    }
  throw ConvergenceError("spectral Picard iteration did not converge", res);
}

NormPair
linf_and_lp(const NodalField &u, double p)
{
  if (!(p >= 1.0))
    throw ParameterError("L^p exponent must be >= 1");
  double sum = 0.0;
  for_each_quadrature_point(u.dim(), u.divisions(), 3, [&](const QuadraturePoint &qp) {
    sum += qp.weight * std::pow(std::abs(u.interpolate(qp)), p);
  });
  return {u.max_abs(), std::pow(sum, 1.0 / p)};
}

double
integrability_exponent(int dim, double s)
{
  const double N = dim;
  if (N > 2.0 * s)
    return 1.5 * N / (2.0 * s);
  if (N == 2.0 * s)
    return 2.0;
  return 1.0;
}

} // namespace fracsemi::spectral

// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/params.hpp"

#include "fracsemi/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fracsemi
{

namespace
{
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coeffs = {
  0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
  771.32342877765313,      -176.61502916214059,   12.507343278686905,
  -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
} // namespace

double
lanczos_gamma(double x)
{
  if (x <= 0.0 && x == std::floor(x))
    return std::numeric_limits<double>::quiet_NaN();

  if (x < 0.5)
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));

  const double z = x - 1.0;
  double       sum = lanczos_coeffs[0];
  for (std::size_t i = 1; i < lanczos_coeffs.size(); ++i)
    sum += lanczos_coeffs[i] / (z + static_cast<double>(i));

  const double t = z + lanczos_g + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

FractionalParams
fractional_params(double s)
{
  if (!(s > 0.0 && s < 1.0))
    throw ParameterError("fractional order s must lie in (0,1), got " + std::to_string(s));

  FractionalParams p;
  p.s     = s;
  p.alpha = 1.0 - 2.0 * s;
  p.d_s   = std::pow(2.0, p.alpha) * lanczos_gamma(1.0 - s) / lanczos_gamma(s);
  return p;
}

PowerNonlinearity::PowerNonlinearity(double b, double q)
  : b_(b), q_(q)
{
  if (!(b > 0.0) || !std::isfinite(b))
    throw ParameterError("nonlinearity coefficient b must be positive");
  if (!(q >= 1.0) || !std::isfinite(q))
    throw ParameterError("nonlinearity exponent q must be >= 1");
}

PowerNonlinearity
PowerNonlinearity::disabled(double q)
{
  PowerNonlinearity nl;
  nl.b_ = 0.0;
  nl.q_ = q;
  return nl;
}

double
PowerNonlinearity::f(double t) const noexcept
{
  if (t == 0.0)
    return 0.0;
  return b_ * std::pow(std::abs(t), q_ - 1.0) * t;
}

double
PowerNonlinearity::f_prime(double t) const noexcept
{
  if (q_ == 1.0)
    return b_;
  return q_ * b_ * std::pow(std::abs(t), q_ - 1.0);
}

double
PowerNonlinearity::F(double t) const noexcept
{
  return b_ / (q_ + 1.0) * std::pow(std::abs(t), q_ + 1.0);
}

double
PowerNonlinearity::f_tilde(double t) const
{
  if (is_disabled())
    throw ParameterError("conjugate of a disabled nonlinearity is undefined");
  if (t == 0.0)
    return 0.0;
  // inverse of f: sign(t) (|t| / b)^{1/q}
  return std::copysign(std::pow(std::abs(t) / b_, 1.0 / q_), t);
}

double
PowerNonlinearity::F_tilde(double t) const
{
  if (is_disabled())
    throw ParameterError("conjugate of a disabled nonlinearity is undefined");
  return q_ / (q_ + 1.0) * std::pow(b_, -1.0 / q_) * std::pow(std::abs(t), (q_ + 1.0) / q_);
}

} // namespace fracsemi

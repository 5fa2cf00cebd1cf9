// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_PARAMS_HPP
#define FRACSEMI_PARAMS_HPP

namespace fracsemi
{

/// Gamma function by the Lanczos approximation (g = 7, nine coefficients),
/// with reflection for x < 1/2. Relative accuracy is better than 1e-13 on
/// (0, 2). Poles at non-positive integers return NaN.
double lanczos_gamma(double x);

/// Fractional order together with the extension weight exponent
/// alpha = 1 - 2s and the normalization constant
/// d_s = 2^alpha Gamma(1-s) / Gamma(s).
struct FractionalParams
{
  double s;
  double alpha;
  double d_s;
};

/// Throws ParameterError unless 0 < s < 1.
FractionalParams fractional_params(double s);

struct NonlinearityValue
{
  double f;
  double f_prime;
  double F;
};

struct ConjugateValue
{
  double f_tilde;
  double F_tilde;
};

/// Power-law nonlinearity f(t) = b |t|^{q-1} t with constant b > 0, q >= 1,
/// its primitive F and complementary pair (f~, F~).
class PowerNonlinearity
{
public:
  /// Throws ParameterError unless b > 0 and q >= 1.
  PowerNonlinearity(double b, double q);

  /// f identically zero. Reduces every semilinear solve to its linear part;
  /// conjugate_eval is undefined for it.
  static PowerNonlinearity disabled(double q = 1.0);

  double b() const noexcept { return b_; }
  double q() const noexcept { return q_; }
  bool is_disabled() const noexcept { return b_ == 0.0; }

  double f(double t) const noexcept;
  double f_prime(double t) const noexcept;
  double F(double t) const noexcept;

  NonlinearityValue eval(double t) const noexcept { return {f(t), f_prime(t), F(t)}; }

  double f_tilde(double t) const;
  double F_tilde(double t) const;

  ConjugateValue conjugate_eval(double t) const { return {f_tilde(t), F_tilde(t)}; }

private:
  PowerNonlinearity() = default;

  double b_ = 0.0;
  double q_ = 1.0;
};

} // namespace fracsemi

#endif

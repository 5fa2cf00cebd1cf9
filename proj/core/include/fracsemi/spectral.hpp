// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_SPECTRAL_HPP
#define FRACSEMI_SPECTRAL_HPP

#include "fracsemi/nodal_field.hpp"
#include "fracsemi/params.hpp"

#include <array>
#include <vector>

namespace fracsemi::spectral
{

/// Truncated expansion in the L2-normalized Dirichlet eigenbasis
///   phi_k(x) = 2^{dim/2} prod_i sin(k_i pi x_i),  lambda_k = pi^2 |k|^2,
/// with mode indices 1..k_max per direction, k1 running fastest.
class SpectralField
{
public:
  SpectralField(int dim, int k_max);
  SpectralField(int dim, int k_max, std::vector<double> coeffs);

  int dim() const noexcept { return dim_; }
  int k_max() const noexcept { return k_max_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::vector<double> &coeffs() noexcept { return coeffs_; }
  const std::vector<double> &coeffs() const noexcept { return coeffs_; }

  /// One-based mode indices; k2 is ignored for dim == 1.
  double &at(int k1, int k2 = 1) { return coeffs_[index(k1, k2)]; }
  double at(int k1, int k2 = 1) const { return coeffs_[index(k1, k2)]; }

  double lambda(std::size_t flat) const noexcept;

  /// Callback fn(k1, k2, flat_index) over every stored mode.
  template <class Fn>
  void for_each_mode(Fn &&fn) const
  {
    const int n2 = dim_ == 2 ? k_max_ : 1;
    for (int k2 = 1; k2 <= n2; ++k2)
      for (int k1 = 1; k1 <= k_max_; ++k1)
        fn(k1, k2, index(k1, k2));
  }

  std::size_t index(int k1, int k2 = 1) const noexcept
  {
    return static_cast<std::size_t>(k1 - 1) +
           (dim_ == 2 ? static_cast<std::size_t>(k2 - 1) * static_cast<std::size_t>(k_max_) : 0);
  }

private:
  int                 dim_;
  int                 k_max_;
  std::vector<double> coeffs_;
};

double eigenvalue(int k1, int k2, int dim);

struct Eigenpair
{
  double      lambda;
  ScalarField phi;
};

/// Throws ParameterError for indices < 1 or dim outside {1,2}.
Eigenpair eigenpair(std::array<int, 2> k, int dim);

/// How nodal data is turned into coefficients.
enum class Projection
{
  /// L2 projection of the continuous multilinear interpolant (closed form),
  /// valid for k_max <= 2 * divisions.
  Interpolant,
  /// Discrete sine transform of the nodal samples, which inverts
  /// synthesize() exactly for k_max < divisions.
  Nodal,
};

/// Boundary node values are treated as zero. Throws ResolutionError when the
/// cutoff is not resolved by the grid.
SpectralField analyze(const NodalField &u, int k_max, Projection proj = Projection::Interpolant);

/// Nodal values of the truncated series.
NodalField synthesize(const SpectralField &c, int divisions);

/// (sum lambda_k^sigma c_k^2)^{1/2}.
double sobolev_norm(const SpectralField &c, double sigma);

/// Cumulative sum of lambda^sigma c^2 over the shells max(k1,k2) <= n,
/// n = 1..k_max.
std::vector<double> sobolev_partial_sums(const SpectralField &c, double sigma);

/// u_k = lambda_k^{-s} g_k.
SpectralField solve_linear_spectral(const SpectralField &g, const FractionalParams &p);

struct PicardOptions
{
  double tolerance      = 1e-11;
  int    max_iterations = 10000;
  /// Quadrature grid intervals per direction = oversampling * k_max.
  int oversampling = 4;
};

struct SpectralSolution
{
  SpectralField u;
  int           iterations;
  double        residual;
};

/// Fixed point of u = Lambda^{-s} P(g - f(u)) by damped Picard iteration.
/// f(u) is evaluated on an oversampled grid and projected back by a discrete
/// sine transform. Throws ConvergenceError when the cap is exceeded.
SpectralSolution solve_semilinear_spectral(const SpectralField &g, const FractionalParams &p,
                                           const PowerNonlinearity &nl,
                                           const PicardOptions &opts = {});

struct NormPair
{
  double sup_norm;
  double lp_norm;
};

/// Nodal maximum and L^p norm (3-point Gauss per cell) of the interpolant.
NormPair linf_and_lp(const NodalField &u, double p);

/// Exponent for the L^infty bound: any p > N/(2s) when N > 2s, p > 1 when
/// N = 2s, p = 1 otherwise. Picks 1.5 N/(2s) in the first case and 2 in the
/// second.
double integrability_exponent(int dim, double s);

} // namespace fracsemi::spectral

#endif

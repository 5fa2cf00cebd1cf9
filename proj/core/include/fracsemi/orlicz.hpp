// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_ORLICZ_HPP
#define FRACSEMI_ORLICZ_HPP

#include "fracsemi/nodal_field.hpp"
#include "fracsemi/params.hpp"

#include <functional>

namespace fracsemi::orlicz
{

/// An even, convex N-function t -> Phi(t) >= 0 with Phi(0) = 0.
using NFunction = std::function<double(double)>;

/// Integral of phi(u) over the domain, using per-cell tensor Gauss
/// quadrature of the multilinear interpolant.
double integrate_modular(const NodalField &u, const NFunction &phi, int points = 2);

/// Luxemburg norm inf{k > 0 : integral phi(u / k) <= 1} by bisection on k.
/// Returns 0 for the zero field; throws InputError for non-finite values.
double luxemburg_norm(const NodalField &u, const NFunction &phi);

/// Norm in L_F with F the primitive of the power nonlinearity.
double luxemburg_norm(const NodalField &u, const PowerNonlinearity &nl);

/// Norm in the complementary space L_{F~}.
double conjugate_luxemburg_norm(const NodalField &u, const PowerNonlinearity &nl);

struct Delta2Constants
{
  double c1;
  double c2;
};

/// Sharp constants for c1 t f <= F <= t f and c2 t f~ <= F~ <= t f~.
Delta2Constants delta2_constants(const PowerNonlinearity &nl);

/// |integral u v| / (2 ||u||_F ||v||_F~), zero when either norm vanishes.
/// Throws InputError on grid mismatch.
double holder_ratio(const NodalField &u, const NodalField &v, const PowerNonlinearity &nl);

struct ConjugateIntegrals
{
  double F_of_u;
  double F_tilde_of_f_of_u;
};

ConjugateIntegrals conjugate_integrability_check(const NodalField &u, const PowerNonlinearity &nl);

} // namespace fracsemi::orlicz

#endif

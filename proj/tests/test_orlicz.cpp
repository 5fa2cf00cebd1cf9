// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/error.hpp"
#include "fracsemi/orlicz.hpp"

#include <cmath>
#include <gtest/gtest.h>
#include <random>

using namespace fracsemi;
using namespace fracsemi::orlicz;

namespace
{
NodalField
constant(int dim, int m, double c)
{
  return NodalField::sample(dim, m, [c](double, double) { return c; });
}

NodalField
random_field(std::mt19937_64 &rng, int m, double scale)
{
  std::uniform_real_distribution<double> d(-scale, scale);
  NodalField                             u(2, m);
  for (double &v : u.values())
    v = d(rng);
  return u;
}

double
l2_norm(const NodalField &u)
{
  return std::sqrt(integrate_modular(u, [](double t) { return t * t; }));
}
} // namespace

TEST(Luxemburg, QuadraticIsL2)
{
  const PowerNonlinearity sq(2.0, 1.0);
  EXPECT_NEAR(luxemburg_norm(constant(2, 4, 1.0), sq), 1.0, 1e-8);
  EXPECT_NEAR(luxemburg_norm(constant(2, 4, 3.5), sq), 3.5, 1e-8 * 3.5);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i)
    {
      const auto u = random_field(rng, 6, 4.0);
      EXPECT_NEAR(luxemburg_norm(u, sq), l2_norm(u), 1e-8 * l2_norm(u));
    }
}

TEST(Luxemburg, QuarticOfOne)
{
  EXPECT_NEAR(luxemburg_norm(constant(2, 4, 1.0), PowerNonlinearity(4.0, 3.0)), 1.0, 1e-8);
}

TEST(Luxemburg, ModularIsOneAtNorm)
{
  std::mt19937_64         rng(5);
  const PowerNonlinearity nl(1.3, 2.2);
  const auto              u = random_field(rng, 5, 10.0);
  const double            k = luxemburg_norm(u, nl);
  const double I = integrate_modular(u, [&](double t) { return nl.F(t / k); });
  EXPECT_NEAR(I, 1.0, 1e-8);
}

TEST(Luxemburg, ZeroAndInvalid)
{
  const PowerNonlinearity nl(1.0, 3.0);
  EXPECT_EQ(luxemburg_norm(NodalField(2, 4), nl), 0.0);
  NodalField bad(2, 4);
  bad.at(2, 2) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(luxemburg_norm(bad, nl), InputError);
}

TEST(Luxemburg, Homogeneity)
{
  std::mt19937_64         rng(9);
  const PowerNonlinearity nl(1.0, 3.0);
  const auto              u    = random_field(rng, 8, 2.0);
  const double            base = luxemburg_norm(u, nl);
  for (double c : {-50.0, -1.0, 1e-3, 0.5, 2.0, 1e3})
    {
      NodalField cu = u;
      for (double &v : cu.values())
        v *= c;
      EXPECT_NEAR(luxemburg_norm(cu, nl), std::abs(c) * base, 1e-8 * std::abs(c) * base);
    }
}

TEST(Luxemburg, TriangleInequality)
{
  std::mt19937_64         rng(13);
  const PowerNonlinearity nl(0.7, 2.5);
  for (int i = 0; i < 100; ++i)
    {
      const auto u = random_field(rng, 5, 3.0);
      const auto v = random_field(rng, 5, 3.0);
      NodalField w = u;
      for (std::size_t k = 0; k < w.size(); ++k)
        w.values()[k] += v.values()[k];
      EXPECT_LE(luxemburg_norm(w, nl), luxemburg_norm(u, nl) + luxemburg_norm(v, nl) + 1e-9);
    }
}

TEST(Delta2, Constants)
{
  const auto a = delta2_constants(PowerNonlinearity(1.0, 1.0));
  EXPECT_DOUBLE_EQ(a.c1, 0.5);
  EXPECT_DOUBLE_EQ(a.c2, 0.5);
  const auto b = delta2_constants(PowerNonlinearity(1.0, 3.0));
  EXPECT_DOUBLE_EQ(b.c1, 0.25);
  EXPECT_DOUBLE_EQ(b.c2, 0.75);
}

TEST(Delta2, ChainsHoldWithEquality)
{
  for (double q : {1.0, 1.5, 3.0, 6.0})
    {
      const PowerNonlinearity nl(2.0, q);
      const auto              c = delta2_constants(nl);
      for (double t = -5.0; t <= 5.0; t += 0.25)
        {
          const double tf = t * nl.f(t);
          EXPECT_NEAR(c.c1 * tf, nl.F(t), 1e-12 * (1.0 + tf));
          EXPECT_LE(nl.F(t), tf + 1e-12);
          if (t != 0.0)
            {
              const double tau   = nl.f(t);
              const double tft   = tau * nl.f_tilde(tau);
              EXPECT_NEAR(c.c2 * tft, nl.F_tilde(tau), 1e-12 * (1.0 + tft));
              EXPECT_LE(nl.F_tilde(tau), tft + 1e-12);
            }
        }
    }
}

TEST(Holder, ZeroField)
{
  std::mt19937_64 rng(1);
  EXPECT_EQ(holder_ratio(NodalField(2, 4), random_field(rng, 4, 1.0), PowerNonlinearity(1.0, 3.0)), 0.0);
}

TEST(Holder, ConstantOnesWithQuadratic)
{
  // F = t^2 has conjugate t^2/4, so ||1||_F = 1 and ||1||_{F~} = 1/2
  const PowerNonlinearity sq(2.0, 1.0);
  const auto              one = constant(2, 4, 1.0);
  EXPECT_NEAR(luxemburg_norm(one, sq), 1.0, 1e-8);
  EXPECT_NEAR(conjugate_luxemburg_norm(one, sq), 0.5, 1e-8);
  EXPECT_NEAR(holder_ratio(one, one, sq), 1.0, 1e-8);
}

TEST(Holder, RandomPairsBounded)
{
  std::mt19937_64                        rng(17);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 1000; ++i)
    {
      const PowerNonlinearity nl(0.2 + 3.0 * u01(rng), 1.0 + 4.0 * u01(rng));
      const auto              u = random_field(rng, 4, 5.0 * u01(rng) + 0.1);
      const auto              v = random_field(rng, 4, 5.0 * u01(rng) + 0.1);
      EXPECT_LE(holder_ratio(u, v, nl), 1.0 + 1e-8);
    }
}

TEST(Holder, GridMismatch)
{
  EXPECT_THROW(holder_ratio(NodalField(2, 4), NodalField(2, 5), PowerNonlinearity(1.0, 3.0)), InputError);
  EXPECT_THROW(holder_ratio(NodalField(1, 4), NodalField(2, 4), PowerNonlinearity(1.0, 3.0)), InputError);
}

TEST(ConjugateIntegrability, Examples)
{
  const PowerNonlinearity nl(1.0, 3.0);
  const auto              z = conjugate_integrability_check(NodalField(2, 3), nl);
  EXPECT_EQ(z.F_of_u, 0.0);
  EXPECT_EQ(z.F_tilde_of_f_of_u, 0.0);
  const auto one = conjugate_integrability_check(constant(2, 3, 1.0), nl);
  EXPECT_NEAR(one.F_of_u, 0.25, 1e-14);
  EXPECT_NEAR(one.F_tilde_of_f_of_u, 0.75, 1e-14);
}

TEST(ConjugateIntegrability, RandomChain)
{
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i)
    {
      const PowerNonlinearity nl(1.0 + i * 0.05, 1.0 + i * 0.08);
      const auto              r = conjugate_integrability_check(random_field(rng, 6, 3.0), nl);
      EXPECT_TRUE(std::isfinite(r.F_of_u));
      EXPECT_TRUE(std::isfinite(r.F_tilde_of_f_of_u));
      EXPECT_LE(r.F_tilde_of_f_of_u, (nl.q() + 1.0) * r.F_of_u + 1e-10);
    }
}

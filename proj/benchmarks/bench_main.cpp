// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/extension.hpp"
#include "fracsemi/mesh.hpp"
#include "fracsemi/nodal_field.hpp"
#include "fracsemi/params.hpp"
#include "fracsemi/solver.hpp"
#include "fracsemi/spectral.hpp"
#include "fracsemi/study.hpp"

#include <benchmark/benchmark.h>

namespace
{

using namespace fracsemi;

constexpr double kS = 0.4;

extension::CylinderSystem
make_system(int M)
{
  const auto p = fractional_params(kS);
  return extension::assemble_system(
    base_mesh(2, M), graded_mesh(M, default_gamma(kS), default_truncation(2, kS, M)), p);
}

void
BM_Assemble(benchmark::State &state)
{
  const int M = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(make_system(M));
}
BENCHMARK(BM_Assemble)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void
BM_Pcg(benchmark::State &state)
{
  const int  M    = static_cast<int>(state.range(0));
  const auto sys  = make_system(M);
  const auto prob = study::manufactured_problem(2, sys.params, PowerNonlinearity(1.0, 3.0));
  const auto load = extension::assemble_load(prob.g, sys);
  for (auto _ : state)
    benchmark::DoNotOptimize(solver::pcg(sys.K, load, 1e-11));
}
BENCHMARK(BM_Pcg)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void
BM_Newton(benchmark::State &state)
{
  const int  M    = static_cast<int>(state.range(0));
  const auto sys  = make_system(M);
  const auto nl   = PowerNonlinearity(1.0, 3.0);
  const auto prob = study::manufactured_problem(2, sys.params, nl);
  const auto load = extension::assemble_load(prob.g, sys);
  for (auto _ : state)
    benchmark::DoNotOptimize(solver::newton_solve(sys, nl, load));
}
BENCHMARK(BM_Newton)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void
BM_Analyze(benchmark::State &state)
{
  const int  K = static_cast<int>(state.range(0));
  const auto u = NodalField::sample(2, 4 * K, [](double x1, double x2) {
    return x1 * (1.0 - x1) * x2 * (1.0 - x2);
  });
  for (auto _ : state)
    benchmark::DoNotOptimize(spectral::analyze(u, K));
}
BENCHMARK(BM_Analyze)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

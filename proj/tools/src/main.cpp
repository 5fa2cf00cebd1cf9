// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/checks.hpp"
#include "fracsemi/error.hpp"
#include "fracsemi/extension.hpp"
#include "fracsemi/mesh.hpp"
#include "fracsemi/params.hpp"
#include "fracsemi/solver.hpp"
#include "fracsemi/spectral.hpp"
#include "fracsemi/study.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace fracsemi;

namespace
{

constexpr int exit_ok          = 0;
constexpr int exit_usage       = 1;
constexpr int exit_nonconverge = 2;

struct Overrides
{
  std::string           config;
  std::optional<int>    dim;
  std::optional<double> s;
  std::optional<double> q;
  std::optional<double> b;
  std::optional<std::string> levels;
  std::optional<double> gamma;
  std::optional<double> Y;
  std::optional<int>    K_max;
  std::optional<double> cg_tol;
  std::optional<double> newton_tol;
  std::optional<int>    max_newton;
  std::optional<std::string> out;
};

void
add_study_flags(CLI::App &app, Overrides &o)
{
  app.add_option("--dim", o.dim, "Space dimension (1 or 2)");
  app.add_option("--s", o.s, "Fractional order in (0,1)");
  app.add_option("--q", o.q, "Power of the nonlinearity, >= 1");
  app.add_option("--b", o.b, "Coefficient of the nonlinearity; 0 disables it");
  app.add_option("--levels", o.levels, "Comma-separated base divisions, e.g. 4,8,16,32");
  app.add_option("--gamma", o.gamma, "Grading exponent of the y-mesh");
  app.add_option("--Y", o.Y, "Truncation height of the cylinder");
  app.add_option("--K_max", o.K_max, "Sine cutoff for the H^s error (0: 2M)");
  app.add_option("--cg_tol", o.cg_tol, "Relative tolerance of the inner CG solves");
  app.add_option("--newton_tol", o.newton_tol, "Newton residual tolerance");
  app.add_option("--max_newton", o.max_newton, "Newton iteration cap");
}

study::StudyConfig
resolve(const Overrides &o)
{
  study::StudyConfig cfg;
  if (o.dim && !o.levels && o.config.empty())
    cfg.levels = study::default_levels(*o.dim);
  if (!o.config.empty())
    cfg = study::load_config(o.config, cfg);
  if (o.dim)
    cfg.dim = *o.dim;
  if (o.s)
    cfg.s = *o.s;
  if (o.q)
    cfg.q = *o.q;
  if (o.b)
    cfg.b = *o.b;
  if (o.levels)
    cfg.levels = study::parse_levels(*o.levels);
  if (o.gamma)
    cfg.gamma = *o.gamma;
  if (o.Y)
    cfg.Y = *o.Y;
  if (o.K_max)
    cfg.K_max = *o.K_max;
  if (o.cg_tol)
    cfg.cg_tol = *o.cg_tol;
  if (o.newton_tol)
    cfg.newton_tol = *o.newton_tol;
  if (o.max_newton)
    cfg.max_newton = *o.max_newton;
  if (o.out)
    cfg.output = *o.out;
  cfg.validate();
  for (const auto &w : cfg.warnings())
    std::cerr << "warning: " << w << '\n';
  return cfg;
}

int
run_solve(const study::StudyConfig &cfg, std::optional<int> level, const std::string &dump)
{
  const int M = level.value_or(cfg.levels.back());
  const auto p     = fractional_params(cfg.s);
  const auto nl    = cfg.nonlinearity();
  const auto mp    = study::manufactured_problem(cfg.dim, p, nl);
  const double gamma = cfg.gamma.value_or(default_gamma(cfg.s));
  const double Y     = cfg.Y.value_or(default_truncation(cfg.dim, cfg.s, M));

  const auto sys  = extension::assemble_system(base_mesh(cfg.dim, M), graded_mesh(M, gamma, Y), p);
  const auto load = extension::assemble_load(mp.g, sys);

  if (!dump.empty())
    {
      std::ofstream out(dump);
      if (!out)
        throw IoError("cannot open dump file " + dump);
      sys.K.write_triplets(out);
    }

  solver::NewtonOptions opts;
  opts.tolerance       = cfg.newton_tol;
  opts.inner_tolerance = cfg.cg_tol;
  opts.max_iterations  = cfg.max_newton;
  const auto report    = solver::newton_solve(sys, nl, load, opts);

  fmt::print("dim            {}\n", cfg.dim);
  fmt::print("s              {}\n", cfg.s);
  fmt::print("nonlinearity   {}\n",
             nl.is_disabled() ? std::string("off") : fmt::format("{} |u|^{} u", nl.b(), nl.q() - 1.0));
  fmt::print("M              {}\n", M);
  fmt::print("gamma          {:.6g}\n", gamma);
  fmt::print("Y              {:.6g}\n", Y);
  fmt::print("ndof           {}\n", sys.dofs());
  fmt::print("newton_iters   {}\n", report.newton_iters);
  fmt::print("cg_iters       {}\n", report.cg_iters_total);
  fmt::print("residuals     ");
  for (double r : report.residual_history)
    fmt::print(" {:.3e}", r);
  fmt::print("\n");

  if (!report.converged)
    {
      std::cerr << "error: Newton did not converge\n";
      return exit_nonconverge;
    }

  const auto err = extension::trace_errors(report.solution, sys, mp.exact_u, cfg.K_max);
  fmt::print("err_l2         {:.6e}\n", err.l2);
  fmt::print("err_hs         {:.6e}\n", err.hs);
  fmt::print("err_hs_nodal   {:.6e}\n", err.hs_nodal);
  fmt::print("trace_max      {:.6e}\n", extension::trace_field(report.solution, sys).max_abs());
  fmt::print("exact_max      {:.6e}\n", mp.amplitude);
  return exit_ok;
}

int
run_converge(const study::StudyConfig &cfg, const std::string &svg)
{
  if (cfg.output.empty())
    throw InputError("converge needs --out (or output = ... in the config)");
  const auto rows = study::run_convergence(cfg);
  study::emit(rows, study::Format::Csv, cfg.output);
  if (!svg.empty())
    study::emit(rows, study::Format::Svg, svg);

  fmt::print("{:>5} {:>5} {:>9} {:>12} {:>12} {:>8} {:>8} {:>6}\n", "level", "M", "ndof", "err_l2",
             "err_hs", "rate_l2", "rate_hs", "newton");
  std::vector<std::pair<double, double>> l2, hs;
  for (const auto &r : rows)
    {
      fmt::print("{:>5} {:>5} {:>9} {:>12.4e} {:>12.4e} {:>8.3f} {:>8.3f} {:>6}\n", r.level, r.M, r.ndof,
                 r.err_l2, r.err_hs, r.rate_l2, r.rate_hs, r.newton_iters);
      l2.emplace_back(double(r.ndof), r.err_l2);
      hs.emplace_back(double(r.ndof), r.err_hs);
    }
  if (rows.size() >= 2)
    fmt::print("fitted slope vs ndof: l2 {:.4f}, hs {:.4f}\n", study::estimate_rate(l2),
               study::estimate_rate(hs));
  return exit_ok;
}

int
run_oracle(int dim, double s, double q, double b, int k_max)
{
  const auto p  = fractional_params(s);
  const auto nl = b == 0.0 ? PowerNonlinearity::disabled(q) : PowerNonlinearity(b, q);
  const auto mp = study::manufactured_problem(dim, p, nl);
  if (k_max < 2)
    throw InputError("--kmax must be at least 2");

  const int  grid = 4 * k_max;
  const auto g    = spectral::analyze(NodalField::sample(dim, grid, mp.g), k_max, spectral::Projection::Nodal);
  const auto sol  = spectral::solve_semilinear_spectral(g, p, nl);

  const int    k     = 2;
  const double exact = mp.amplitude / std::pow(2.0, dim / 2.0);
  const double got   = dim == 1 ? sol.u.at(k, 1) : sol.u.at(k, k);

  auto u_nodal = spectral::synthesize(sol.u, grid);
  NodalField fu = u_nodal;
  for (double &v : fu.values())
    v = nl.f(v);
  const auto fu_c = spectral::analyze(fu, k_max, spectral::Projection::Nodal);
  spectral::SpectralField r(dim, k_max);
  for (std::size_t i = 0; i < r.size(); ++i)
    r.coeffs()[i] = g.coeffs()[i] - fu_c.coeffs()[i];
  const double h2s = spectral::sobolev_norm(sol.u, 2.0 * s);
  const double rhs = spectral::sobolev_norm(r, 0.0);

  const double pexp  = spectral::integrability_exponent(dim, s);
  const auto   norms = spectral::linf_and_lp(spectral::synthesize(g, grid), pexp);

  spectral::SpectralField mode(dim, k_max);
  if (dim == 1)
    mode.coeffs()[mode.index(k, 1)] = 1.0;
  else
    mode.coeffs()[mode.index(k, k)] = 1.0;
  const auto   lin     = spectral::solve_linear_spectral(mode, p);
  const double lin_ref = std::pow(spectral::eigenvalue(k, dim == 1 ? 1 : k, dim), -s);
  const double lin_val = dim == 1 ? lin.at(k, 1) : lin.at(k, k);

  fmt::print("d_s                      {:.17g}\n", p.d_s);
  fmt::print("picard_iterations        {}\n", sol.iterations);
  fmt::print("picard_residual          {:.3e}\n", sol.residual);
  fmt::print("||u||_Hs                 {:.12e}\n", spectral::sobolev_norm(sol.u, s));
  fmt::print("||g||_H-s                {:.12e}\n", spectral::sobolev_norm(g, -s));
  fmt::print("||u||_H2s                {:.12e}\n", h2s);
  fmt::print("||g - f(u)||_L2          {:.12e}\n", rhs);
  fmt::print("H2s identity rel err     {:.3e}\n", std::abs(h2s - rhs) / rhs);
  fmt::print("sup|u|                   {:.12e}\n", u_nodal.max_abs());
  fmt::print("{:<25}{:.12e}\n", fmt::format("||g||_Lp (p = {:.4g})", pexp), norms.lp_norm);
  fmt::print("manufactured mode coeff  {:.12e} (exact {:.12e}, rel err {:.3e})\n", got, exact,
             std::abs(got - exact) / exact);
  fmt::print("linear identity rel err  {:.3e}\n", std::abs(lin_val - lin_ref) / lin_ref);
  return exit_ok;
}

int
run_check()
{
  int failed = 0;
  for (const auto &c : checks::run_property_suite())
    {
      fmt::print("{} {}: {}\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
      failed += c.passed ? 0 : 1;
    }
  return failed == 0 ? exit_ok : exit_usage;
}

} // namespace

int
main(int argc, char **argv)
{
  CLI::App app{"Semilinear spectral fractional Dirichlet problems on the unit interval and square"};
  app.require_subcommand(1);

  Overrides             solve_o;
  std::optional<int>    solve_level;
  std::string           dump;
  auto *solve = app.add_subcommand("solve", "Single manufactured-solution solve");
  solve->add_option("--config", solve_o.config, "key = value configuration file")->check(CLI::ExistingFile);
  add_study_flags(*solve, solve_o);
  solve->add_option("--level", solve_level, "Base divisions M (default: last of levels)");
  solve->add_option("--dump", dump, "Write the extension stiffness as row col value triplets");

  Overrides   conv_o;
  std::string svg;
  auto *converge = app.add_subcommand("converge", "Convergence study with CSV/SVG output");
  converge->add_option("--config", conv_o.config, "key = value configuration file")->check(CLI::ExistingFile);
  add_study_flags(*converge, conv_o);
  converge->add_option("--out", conv_o.out, "CSV output path");
  converge->add_option("--svg", svg, "SVG output path");

  int    o_dim = 2, o_kmax = 16;
  double o_s = 0.4, o_q = 3.0, o_b = 1.0;
  auto  *oracle = app.add_subcommand("oracle", "Spectral reference solve and identity checks");
  oracle->add_option("--dim", o_dim, "Space dimension (1 or 2)")->check(CLI::IsMember({1, 2}));
  oracle->add_option("--s", o_s, "Fractional order in (0,1)")->required();
  oracle->add_option("--q", o_q, "Power of the nonlinearity");
  oracle->add_option("--b", o_b, "Coefficient of the nonlinearity; 0 disables it");
  oracle->add_option("--kmax", o_kmax, "Sine modes per direction");

  auto *check = app.add_subcommand("check", "Runtime property suite");

  try
    {
      app.parse(argc, argv);
    }
  catch (const CLI::ParseError &e)
    {
      return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

  try
    {
      if (*solve)
        return run_solve(resolve(solve_o), solve_level, dump);
      if (*converge)
        return run_converge(resolve(conv_o), svg);
      if (*oracle)
        return run_oracle(o_dim, o_s, o_q, o_b, o_kmax);
      if (*check)
        return run_check();
    }
  catch (const ConvergenceError &e)
    {
      std::cerr << "error: " << e.what() << " (last residual " << e.last_residual() << ")\n";
      return exit_nonconverge;
    }
  catch (const Error &e)
    {
      std::cerr << "error: " << e.what() << '\n';
      return exit_usage;
    }
  return exit_usage;
}

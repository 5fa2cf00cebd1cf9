// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/study.hpp"

#include "fracsemi/error.hpp"
#include "fracsemi/extension.hpp"
#include "fracsemi/mesh.hpp"
#include "fracsemi/solver.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <sstream>

namespace fracsemi::study
{

namespace
{
std::string
trim(const std::string &s)
{
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double
to_double(const std::string &key, const std::string &value)
{
  try
    {
      std::size_t used = 0;
      const double v   = std::stod(value, &used);
      if (used != value.size())
        throw std::invalid_argument(value);
      return v;
    }
  catch (const std::exception &)
    {
      throw InputError("config key '" + key + "' expects a number, got '" + value + "'");
    }
}

int
to_int(const std::string &key, const std::string &value)
{
  try
    {
      std::size_t used = 0;
      const int   v    = std::stoi(value, &used);
      if (used != value.size())
        throw std::invalid_argument(value);
      return v;
    }
  catch (const std::exception &)
    {
      throw InputError("config key '" + key + "' expects an integer, got '" + value + "'");
    }
}
} // namespace

void
StudyConfig::validate() const
{
  if (dim != 1 && dim != 2)
    throw ParameterError("dim must be 1 or 2");
  if (!(s > 0.0 && s < 1.0))
    throw ParameterError("s must lie in (0,1)");
  if (!(q >= 1.0))
    throw ParameterError("q must be >= 1");
  if (!(b >= 0.0))
    throw ParameterError("b must be >= 0 (0 disables the nonlinearity)");
  if (levels.empty())
    throw ParameterError("at least one level is required");
  for (std::size_t i = 0; i < levels.size(); ++i)
    {
      if (levels[i] < 2)
        throw ParameterError("levels must be >= 2");
      if (i > 0 && levels[i] <= levels[i - 1])
        throw ParameterError("levels must be strictly increasing");
    }
  if (gamma && !(*gamma > 3.0 / (2.0 * s)))
    throw ParameterError("gamma must exceed 3/(2s)");
  if (Y && !(*Y > 0.0))
    throw ParameterError("Y must be positive");
  if (K_max < 0)
    throw ParameterError("K_max must be >= 0");
  if (!(cg_tol > 0.0) || !(newton_tol > 0.0))
    throw ParameterError("tolerances must be positive");
  if (max_newton < 1)
    throw ParameterError("max_newton must be >= 1");
}

std::vector<std::string>
StudyConfig::warnings() const
{
  std::vector<std::string> out;
  if (s <= (dim - 2.0) / 2.0)
    out.push_back("s <= (N-2)/2: the discrete L-infinity bound behind the error estimate "
                  "does not apply");
  return out;
}

PowerNonlinearity
StudyConfig::nonlinearity() const
{
  return b == 0.0 ? PowerNonlinearity::disabled(q) : PowerNonlinearity(b, q);
}

std::vector<int>
default_levels(int dim)
{
  if (dim == 1)
    return {8, 16, 32, 64, 128, 256};
  return {4, 8, 16, 32};
}

std::vector<int>
parse_levels(const std::string &text)
{
  std::vector<int>  out;
  std::stringstream ss(text);
  std::string       item;
  while (std::getline(ss, item, ','))
    {
      item = trim(item);
      if (!item.empty())
        out.push_back(to_int("levels", item));
    }
  if (out.empty())
    throw InputError("levels list is empty");
  return out;
}

StudyConfig
parse_config(std::istream &in, StudyConfig cfg)
{
  std::string line;
  int         lineno = 0;
  while (std::getline(in, line))
    {
      ++lineno;
      if (const auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      line = trim(line);
      if (line.empty())
        continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw InputError(fmt::format("config line {}: expected key = value", lineno));
      const std::string key   = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));

      if (key == "dim")
        cfg.dim = to_int(key, value);
      else if (key == "s")
        cfg.s = to_double(key, value);
      else if (key == "q")
        cfg.q = to_double(key, value);
      else if (key == "b")
        cfg.b = to_double(key, value);
      else if (key == "levels")
        cfg.levels = parse_levels(value);
      else if (key == "gamma")
        cfg.gamma = to_double(key, value);
      else if (key == "Y")
        cfg.Y = to_double(key, value);
      else if (key == "K_max")
        cfg.K_max = to_int(key, value);
      else if (key == "cg_tol")
        cfg.cg_tol = to_double(key, value);
      else if (key == "newton_tol")
        cfg.newton_tol = to_double(key, value);
      else if (key == "max_newton")
        cfg.max_newton = to_int(key, value);
      else if (key == "output")
        cfg.output = value;
      else
        throw InputError(fmt::format("config line {}: unknown key '{}'", lineno, key));
    }
  return cfg;
}

StudyConfig
load_config(const std::string &path, StudyConfig base)
{
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open config file '" + path + "'");
  return parse_config(in, std::move(base));
}

ManufacturedProblem
manufactured_problem(int dim, const FractionalParams &p, const PowerNonlinearity &nl)
{
  constexpr double pi = std::numbers::pi;
  if (dim != 1 && dim != 2)
    throw ParameterError("manufactured problem supports dim 1 or 2");

  const double lambda = (dim == 2 ? 8.0 : 4.0) * pi * pi;
  const double amp    = std::pow(lambda, -p.s);

  ScalarField mode;
  if (dim == 2)
    mode = [](double x1, double x2) { return std::sin(2.0 * pi * x1) * std::sin(2.0 * pi * x2); };
  else
    mode = [](double x, double) { return std::sin(2.0 * pi * x); };

  ManufacturedProblem mp;
  mp.amplitude = amp;
  mp.exact_u   = [mode, amp](double x1, double x2) { return amp * mode(x1, x2); };
  mp.g         = [mode, amp, nl](double x1, double x2) {
    const double m = mode(x1, x2);
    return m + nl.f(amp * m);
  };
  return mp;
}

std::vector<RateRow>
run_convergence(const StudyConfig &cfg)
{
  cfg.validate();
  const FractionalParams  p  = fractional_params(cfg.s);
  const PowerNonlinearity nl = cfg.nonlinearity();
  const auto              mp = manufactured_problem(cfg.dim, p, nl);

  std::vector<RateRow> rows;
  for (std::size_t level = 0; level < cfg.levels.size(); ++level)
    {
      const int    M     = cfg.levels[level];
      const double gamma = cfg.gamma.value_or(default_gamma(cfg.s));
      const double Y     = cfg.Y.value_or(default_truncation(cfg.dim, cfg.s, M));

      const auto sys  = extension::assemble_system(base_mesh(cfg.dim, M), graded_mesh(M, gamma, Y), p);
      const auto load = extension::assemble_load(mp.g, sys);

      solver::NewtonOptions opts;
      opts.tolerance       = cfg.newton_tol;
      opts.inner_tolerance = cfg.cg_tol;
      opts.max_iterations  = cfg.max_newton;
      const auto report    = solver::newton_solve(sys, nl, load, opts);
      if (!report.converged)
        throw ConvergenceError(fmt::format("Newton did not converge at level {} (M = {})", level, M),
                               report.residual_history.back());

      const auto err = extension::trace_errors(report.solution, sys, mp.exact_u, cfg.K_max);

      RateRow row;
      row.level            = static_cast<int>(level);
      row.M                = M;
      row.ndof             = sys.dofs();
      row.Y                = Y;
      row.gamma            = gamma;
      row.err_l2           = err.l2;
      row.err_hs           = err.hs;
      row.rate_l2          = std::numeric_limits<double>::quiet_NaN();
      row.rate_hs          = std::numeric_limits<double>::quiet_NaN();
      row.newton_iters     = report.newton_iters;
      row.residual_history = report.residual_history;
      row.trace_max        = extension::trace_field(report.solution, sys).max_abs();
      if (!rows.empty())
        {
          const RateRow &prev = rows.back();
          const double   dn   = std::log(double(row.ndof) / double(prev.ndof));
          row.rate_l2         = std::log(prev.err_l2 / row.err_l2) / dn;
          row.rate_hs         = std::log(prev.err_hs / row.err_hs) / dn;
        }
      rows.push_back(std::move(row));
    }
  return rows;
}

double
estimate_rate(const std::vector<std::pair<double, double>> &pairs)
{
  if (pairs.size() < 2)
    throw InputError("estimate_rate needs at least two points");
  double sx = 0.0, sy = 0.0;
  for (const auto &[n, e] : pairs)
    {
      if (!(n > 0.0) || !(e > 0.0))
        throw InputError("estimate_rate needs positive ndof and errors");
      sx += std::log(n);
      sy += std::log(e);
    }
  const double m  = static_cast<double>(pairs.size());
  const double mx = sx / m, my = sy / m;
  double       sxx = 0.0, sxy = 0.0;
  for (const auto &[n, e] : pairs)
    {
      const double dx = std::log(n) - mx;
      sxx += dx * dx;
      sxy += dx * (std::log(e) - my);
    }
  if (sxx == 0.0)
    throw InputError("estimate_rate needs at least two distinct ndof values");
  return sxy / sxx;
}

void
write_csv(const std::vector<RateRow> &rows, std::ostream &out)
{
  out << csv_header << '\n';
  for (const RateRow &r : rows)
    fmt::print(out, "{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{}\n", r.level, r.M,
               r.ndof, r.Y, r.gamma, r.err_l2, r.err_hs, r.rate_l2, r.rate_hs, r.newton_iters);
}

void
write_svg(const std::vector<RateRow> &rows, std::ostream &out)
{
  constexpr double width = 640, height = 480, margin = 60;

  double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const RateRow &r : rows)
    {
      const double x = std::log10(double(r.ndof));
      xmin           = std::min(xmin, x);
      xmax           = std::max(xmax, x);
      for (double e : {r.err_l2, r.err_hs})
        {
          ymin = std::min(ymin, std::log10(e));
          ymax = std::max(ymax, std::log10(e));
        }
    }
  if (xmax - xmin < 1e-12)
    {
      xmin -= 0.5;
      xmax += 0.5;
    }
  ymin -= 0.25;
  ymax += 0.25;

  auto px = [&](double lx) { return margin + (lx - xmin) / (xmax - xmin) * (width - 2 * margin); };
  auto py = [&](double ly) {
    return height - margin - (ly - ymin) / (ymax - ymin) * (height - 2 * margin);
  };

  fmt::print(out,
             "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
             "viewBox=\"0 0 {} {}\">\n",
             width, height, width, height);
  fmt::print(out, "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\" "
                  "stroke=\"black\"/>\n",
             margin, margin, width - 2 * margin, height - 2 * margin);

  auto series = [&](const char *name, const char *color, auto err) {
    fmt::print(out, "<polyline class=\"series\" data-name=\"{}\" fill=\"none\" stroke=\"{}\" "
                    "stroke-width=\"2\" points=\"",
               name, color);
    for (std::size_t i = 0; i < rows.size(); ++i)
      fmt::print(out, "{}{:.3f},{:.3f}", i ? " " : "", px(std::log10(double(rows[i].ndof))),
                 py(std::log10(err(rows[i]))));
    out << "\"/>\n";
  };
  series("err_hs", "red", [](const RateRow &r) { return r.err_hs; });
  series("err_l2", "black", [](const RateRow &r) { return r.err_l2; });

  // reference slopes anchored at the first data point of each series
  auto guide = [&](double slope, double anchor) {
    const double y0 = std::log10(anchor);
    const double y1 = y0 + slope * (xmax - xmin);
    fmt::print(out, "<line class=\"guide\" data-slope=\"{:.6f}\" x1=\"{:.3f}\" y1=\"{:.3f}\" "
                    "x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"blue\" stroke-dasharray=\"6,4\"/>\n",
               slope, px(xmin), py(y0), px(xmax), py(y1));
  };
  guide(-1.0 / 3.0, rows.front().err_hs);
  guide(-2.0 / 3.0, rows.front().err_l2);

  fmt::print(out, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">log10(ndof)</text>\n",
             width / 2, height - 20);
  fmt::print(out,
             "<text x=\"20\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {})\">"
             "log10(error)</text>\n",
             height / 2, height / 2);
  out << "</svg>\n";
}

void
emit(const std::vector<RateRow> &rows, Format format, const std::string &path)
{
  if (rows.empty())
    throw InputError("emit: no rows to write");
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot open '" + path + "' for writing");
  if (format == Format::Csv)
    write_csv(rows, out);
  else
    write_svg(rows, out);
  if (!out)
    throw IoError("write to '" + path + "' failed");
}

} // namespace fracsemi::study

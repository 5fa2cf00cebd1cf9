// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_STUDY_HPP
#define FRACSEMI_STUDY_HPP

#include "fracsemi/nodal_field.hpp"
#include "fracsemi/params.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fracsemi::study
{

/// Parameters of a manufactured-solution convergence study.
struct StudyConfig
{
  int                   dim = 2;
  double                s   = 0.4;
  double                q   = 3.0;
  /// b == 0 disables the nonlinearity.
  double                b = 1.0;
  std::vector<int>      levels{4, 8, 16, 32};
  std::optional<double> gamma;
  std::optional<double> Y;
  /// Sine cutoff for the H^s error; 0 selects 2 * M per level.
  int         K_max      = 0;
  double      cg_tol     = 1e-11;
  double      newton_tol = 1e-10;
  int         max_newton = 50;
  std::string output;

  /// Throws ParameterError describing the first violated constraint.
  void validate() const;

  /// Notes about hypotheses of the error theory that the config violates.
  std::vector<std::string> warnings() const;

  PowerNonlinearity nonlinearity() const;
};

/// Default level ladders: {4,8,16,32} in 2-D, {8,...,256} in 1-D.
std::vector<int> default_levels(int dim);

/// Reads "key = value" lines ('#' starts a comment); keys are the
/// StudyConfig field names and levels is a comma-separated list. Throws
/// InputError for unknown keys or malformed values.
StudyConfig parse_config(std::istream &in, StudyConfig base = {});
StudyConfig load_config(const std::string &path, StudyConfig base = {});

/// Parses "4,8,16" into integers.
std::vector<int> parse_levels(const std::string &text);

struct ManufacturedProblem
{
  ScalarField exact_u;
  ScalarField g;
  /// Coefficient of the eigenmode sin(2 pi x1) [sin(2 pi x2)] in u.
  double amplitude;
};

/// u = lambda^{-s} sin(2 pi x1) sin(2 pi x2) (dim 2) or lambda^{-s} sin(2 pi x)
/// (dim 1), with g = (-Delta)^s u + f(u) evaluated pointwise.
ManufacturedProblem manufactured_problem(int dim, const FractionalParams &p,
                                         const PowerNonlinearity &nl);

struct RateRow
{
  int         level;
  int         M;
  std::size_t ndof;
  double      Y;
  double      gamma;
  double      err_l2;
  double      err_hs;
  /// log(e_{i-1}/e_i) / log(n_i/n_{i-1}); NaN on the first row.
  double rate_l2;
  double rate_hs;
  int    newton_iters;
  /// Not emitted: diagnostics used by the acceptance suite.
  std::vector<double> residual_history;
  double              trace_max;
};

/// Runs every level and fills in consecutive rates. Throws ConvergenceError
/// naming the failing level when Newton does not converge.
std::vector<RateRow> run_convergence(const StudyConfig &cfg);

/// Least-squares slope of log(err) against log(ndof).
double estimate_rate(const std::vector<std::pair<double, double>> &pairs);

inline constexpr const char *csv_header =
  "level,M,ndof,Y,gamma,err_l2,err_hs,rate_l2,rate_hs,newton_iters";

void write_csv(const std::vector<RateRow> &rows, std::ostream &out);
void write_svg(const std::vector<RateRow> &rows, std::ostream &out);

enum class Format
{
  Csv,
  Svg,
};

/// Throws InputError for empty rows and IoError when the path is unwritable.
void emit(const std::vector<RateRow> &rows, Format format, const std::string &path);

} // namespace fracsemi::study

#endif

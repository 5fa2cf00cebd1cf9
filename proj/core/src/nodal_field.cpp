// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/nodal_field.hpp"

#include "fracsemi/error.hpp"

#include <algorithm>
#include <cmath>

namespace fracsemi
{

NodalField::NodalField(int dim, int divisions)
  : dim_(dim), divisions_(divisions)
{
  if (dim != 1 && dim != 2)
    throw ParameterError("NodalField dimension must be 1 or 2");
  if (divisions < 1)
    throw ParameterError("NodalField needs at least one division");
  const std::size_t side = static_cast<std::size_t>(divisions + 1);
  values_.assign(dim == 2 ? side * side : side, 0.0);
}

NodalField::NodalField(int dim, int divisions, std::vector<double> values)
  : NodalField(dim, divisions)
{
  if (values.size() != values_.size())
    throw InputError("NodalField value count does not match (M+1)^dim");
  values_ = std::move(values);
}

NodalField
NodalField::sample(int dim, int divisions, const ScalarField &fn)
{
  NodalField   field(dim, divisions);
  const double h  = 1.0 / divisions;
  const int    n2 = dim == 2 ? divisions + 1 : 1;
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i <= divisions; ++i)
      field.at(i, j) = fn(i * h, dim == 2 ? j * h : 0.0);
  return field;
}

double
NodalField::interpolate(const QuadraturePoint &qp) const noexcept
{
  const int    i = qp.cell1;
  const double a = 1.0 - qp.xi;
  const double b = qp.xi;
  if (dim_ == 1)
    return a * values_[index(i)] + b * values_[index(i + 1)];

  const int    j = qp.cell2;
  const double c = 1.0 - qp.eta;
  const double d = qp.eta;
  return c * (a * values_[index(i, j)] + b * values_[index(i + 1, j)]) +
         d * (a * values_[index(i, j + 1)] + b * values_[index(i + 1, j + 1)]);
}

double
NodalField::max_abs() const noexcept
{
  double m = 0.0;
  for (double v : values_)
    m = std::max(m, std::abs(v));
  return m;
}

bool
NodalField::all_finite() const noexcept
{
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

} // namespace fracsemi

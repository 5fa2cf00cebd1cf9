// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracsemi/quadrature.hpp"

#include "fracsemi/error.hpp"

#include <cmath>

namespace fracsemi
{

namespace
{
// Gauss-Legendre on [-1,1], mapped to [0,1] at lookup time.
constexpr std::array<double, 1> n1 = {0.5};
constexpr std::array<double, 1> w1 = {1.0};
const std::array<double, 2>     n2 = {0.5 - 0.5 / std::sqrt(3.0), 0.5 + 0.5 / std::sqrt(3.0)};
constexpr std::array<double, 2> w2 = {0.5, 0.5};
const std::array<double, 3>     n3 = {0.5 - 0.5 * std::sqrt(0.6), 0.5, 0.5 + 0.5 * std::sqrt(0.6)};
constexpr std::array<double, 3> w3 = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
const std::array<double, 4>     n4 = {
  0.5 - 0.5 * std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(1.2)),
  0.5 - 0.5 * std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(1.2)),
  0.5 + 0.5 * std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(1.2)),
  0.5 + 0.5 * std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(1.2))};
const std::array<double, 4> w4 = {
  (18.0 - std::sqrt(30.0)) / 72.0, (18.0 + std::sqrt(30.0)) / 72.0,
  (18.0 + std::sqrt(30.0)) / 72.0, (18.0 - std::sqrt(30.0)) / 72.0};
const std::array<double, 5> n5 = {
  0.5 - 0.5 / 3.0 * std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)),
  0.5 - 0.5 / 3.0 * std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)),
  0.5,
  0.5 + 0.5 / 3.0 * std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)),
  0.5 + 0.5 / 3.0 * std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0))};
const std::array<double, 5> w5 = {
  0.5 * (322.0 - 13.0 * std::sqrt(70.0)) / 900.0, 0.5 * (322.0 + 13.0 * std::sqrt(70.0)) / 900.0,
  0.5 * 128.0 / 225.0, 0.5 * (322.0 + 13.0 * std::sqrt(70.0)) / 900.0,
  0.5 * (322.0 - 13.0 * std::sqrt(70.0)) / 900.0};
} // namespace

GaussRule
gauss_legendre(int points)
{
  switch (points)
    {
      case 1:
        return {n1, w1};
      case 2:
        return {n2, w2};
      case 3:
        return {n3, w3};
      case 4:
        return {n4, w4};
      case 5:
        return {n5, w5};
      default:
        throw ParameterError("gauss_legendre supports 1..5 points");
    }
}

} // namespace fracsemi

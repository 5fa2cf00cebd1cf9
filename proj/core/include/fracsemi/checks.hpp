// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_CHECKS_HPP
#define FRACSEMI_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fracsemi::checks
{

struct CheckResult
{
  std::string name;
  bool        passed;
  std::string detail;
};

/// Randomized runtime self-checks of the Orlicz inequalities, the spectral
/// identities and the discrete operators. Deterministic for a given seed.
std::vector<CheckResult> run_property_suite(std::uint64_t seed = 20240611);

} // namespace fracsemi::checks

#endif

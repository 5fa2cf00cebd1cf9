// Copyright The fracsemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FRACSEMI_ERROR_HPP
#define FRACSEMI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fracsemi
{

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A scalar parameter lies outside its admissible range.
class ParameterError : public Error
{
public:
  using Error::Error;
};

/// The graded y-mesh violates gamma > 3/(2s).
class GradingError : public ParameterError
{
public:
  using ParameterError::ParameterError;
};

/// Malformed or mismatched field data.
class InputError : public Error
{
public:
  using Error::Error;
};

/// Requested mode cutoff is not resolved by the grid.
class ResolutionError : public Error
{
public:
  using Error::Error;
};

/// An iterative method hit its iteration cap.
class ConvergenceError : public Error
{
public:
  ConvergenceError(const std::string &what, double last_residual)
    : Error(what), last_residual_(last_residual)
  {}

  double last_residual() const noexcept { return last_residual_; }

private:
  double last_residual_;
};

class IoError : public Error
{
public:
  using Error::Error;
};

} // namespace fracsemi

#endif

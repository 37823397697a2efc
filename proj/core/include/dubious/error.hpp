#pragma once

#include <stdexcept>
#include <string>

namespace dubious
{

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a value violates a domain invariant (bad polygon, motive out of range, ...).
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// All goal weights vanished; the inference temperature is too high for the workspace scale.
class DegeneratePosterior : public Error
{
public:
  DegeneratePosterior() : Error("degenerate posterior") {}
};

}  // namespace dubious

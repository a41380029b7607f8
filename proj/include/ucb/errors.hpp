#pragma once

#include <stdexcept>
#include <string>

namespace ucb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument at a pole, or outside the disk where the disk is required.
struct DomainError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

// Root-finder failure, verification residual too large, inconclusive probe.
struct NumericError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace ucb

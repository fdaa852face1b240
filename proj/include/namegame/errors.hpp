#pragma once

#include <stdexcept>
#include <string>

namespace namegame {

// Caller broke an interface contract: bad sizes, bad indices, inconsistent
// arguments.  These indicate programming errors, not data problems.
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A matrix lost positive definiteness (or a factorization failed) beyond what
// jitter can repair.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested discrete distribution has no probability mass at all.
struct DegenerateDistributionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid or inconsistent run configuration (file or CLI).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data file.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace namegame

#pragma once

#include <stdexcept>
#include <string>

namespace exo {

// Bad arguments or precondition violations by the caller.
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numeric inputs outside the model's domain (non-finite, sd <= 0, ...).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Malformed or inconsistent input files.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A well-posed request with no solution (empty feasible set, impossible
// calibration target). Distinct from a crash so callers can branch on it.
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace exo

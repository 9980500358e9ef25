#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tropmod {

// Raised for malformed user input: bad weight data, schema violations,
// arity mismatches, unstable curves passed where stability is required.
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a weight vector lies exactly on a wall; carries the subset
// so callers can report which wall was hit.
class OnWallError : public ValidationError {
public:
  OnWallError(const std::string& msg, std::vector<int> subset)
      : ValidationError(msg), subset_(std::move(subset)) {}
  const std::vector<int>& subset() const { return subset_; }

private:
  std::vector<int> subset_;
};

// Internal-consistency failures (e.g. a contraction of a catalog graph that
// is missing from the catalog). These signal bugs, not bad input.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace tropmod

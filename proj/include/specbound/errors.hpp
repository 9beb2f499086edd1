#pragma once

#include <stdexcept>
#include <string>

namespace specbound {

/// Malformed input: parse failures, dimension mismatches, bad file contents.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its contract (reducible tensor where
/// weak irreducibility is required, nonzero diagonal, zero-degree vertex, ...).
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A size guard refused to materialize a tensor.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Power iteration ran out of iterations; carries the last bracket.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string &what, double lower, double upper)
      : std::runtime_error(what), lower_estimate(lower), upper_estimate(upper) {}

  double lower_estimate;
  double upper_estimate;
};

} // namespace specbound

#pragma once

#include <stdexcept>
#include <string>

namespace birkhoff {

// A construction was invoked outside the hypotheses it needs; the message
// names the violated condition so callers can re-orient (negate, resample).
class PreconditionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The affine equation solved by a construction has no admissible root.
class NoSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation requires a norm-attaining functional and the argument is not.
class NotAttainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Candidate measure is outside the radius the certificate is stated for.
class OutOfRadius : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Top singular subspace too large for the sphere-grid witness search.
class SubspaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace birkhoff

#pragma once

#include <stdexcept>
#include <string>

namespace iq {

// Input outside the supported Hilbert-space or parameter range.
struct SizeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Negative rate/time or otherwise out-of-domain numeric argument.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A matrix that was required to be Hermitian (or diagonal) is not.
struct SymmetryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Non-negligible wave-packet mass outside the retained mode window.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-difference stencil is unusable (eigenvalue crossing/degeneracy).
struct StencilError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No interior optimum exists for the requested parameters.
struct NoOptimumError : std::domain_error {
  using std::domain_error::domain_error;
};

// Parameter combination the closed forms do not cover.
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bad run configuration; message carries the offending field path.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace iq

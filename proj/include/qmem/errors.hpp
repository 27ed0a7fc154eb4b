#pragma once

#include <stdexcept>
#include <string>

namespace qmem {

/// Argument outside an operation's domain (non-Hermitian matrix, probability
/// out of range, non-X-form state where an X-state is required, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix that should be a density matrix is not one (negative eigenvalue
/// beyond the clamping window, wrong trace).
class InvalidState : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Decay envelope with |G|^2 > 1: the Kraus pair would not be a channel.
class InvalidEnvelope : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A numerical oracle failed its own step-halving convergence check.
class IntegrationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qmem

#pragma once

#include <stdexcept>
#include <string>

namespace leinartas {

// Caller violated a precondition: mismatched contexts, bad index, malformed input.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// The input is well formed but mathematically outside the operation's domain
// (zero denominator, factor product mismatch, certificate requested for a
// system that has a common zero, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// An invariant the engine is supposed to guarantee did not hold.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace leinartas

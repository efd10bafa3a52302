#pragma once

#include <stdexcept>
#include <string>

namespace hexforge {

// Error taxonomy shared across the library. Every throwing code path uses
// one of these; the CLI maps them onto its exit-code contract.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// A modular computation hit a prime that violates its preconditions
// (non-squarefree reduction, denominator clash). Callers skip the prime.
struct BadPrime : Error {
  explicit BadPrime(const std::string& msg) : Error(msg) {}
};

// A condition excluded by theory failed; indicates a bug, not bad input.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

struct UnsupportedTower : Error {
  explicit UnsupportedTower(const std::string& msg) : Error(msg) {}
};

// Constant term of the assembled sextic is not a square in the base field.
struct NotA12Compatible : Error {
  explicit NotA12Compatible(const std::string& msg) : Error(msg) {}
};

// Assembled sextic is not separable; drawing fresh twists may fix it.
struct ResampleNeeded : Error {
  explicit ResampleNeeded(const std::string& msg) : Error(msg) {}
};

struct NotSmooth : Error {
  explicit NotSmooth(const std::string& msg) : Error(msg) {}
};

}  // namespace hexforge

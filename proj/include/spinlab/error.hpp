#pragma once

#include <stdexcept>
#include <string>

namespace spinlab {

enum class ErrorKind {
  DivisionByZero,
  UnrepresentableRadical,
  DimensionMismatch,
  NotHermitian,
  NoConvergence,
  NonzeroRemainder,
  InvalidPermutation,
  ZeroVector,
  NotNormalized,
  BlockSizeMismatch,
  MalformedSpec,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers (the CLI in
/// particular) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spinlab

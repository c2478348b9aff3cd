#include "spinlab/error.hpp"

namespace spinlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::UnrepresentableRadical: return "unrepresentable-radical";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NotHermitian: return "not-hermitian";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::NonzeroRemainder: return "nonzero-remainder";
    case ErrorKind::InvalidPermutation: return "invalid-permutation";
    case ErrorKind::ZeroVector: return "zero-vector";
    case ErrorKind::NotNormalized: return "not-normalized";
    case ErrorKind::BlockSizeMismatch: return "block-size-mismatch";
    case ErrorKind::MalformedSpec: return "malformed-spec";
    case ErrorKind::Parse: return "parse-error";
  }
  return "unknown";
}

}  // namespace spinlab

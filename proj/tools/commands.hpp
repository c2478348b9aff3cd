#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spinlab::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 2,
  kNoConvergence = 3,
  kUnrepresentable = 4,
  kFactorMismatch = 5,
  kDegenerateEigenvalue = 6,
};

enum class Format { Json, Text, Csv };

struct CommonOptions {
  std::string spec_path;
  Format format = Format::Json;
  double tol = 1e-6;
  bool timings = false;
};

struct CharpolyOptions {
  std::optional<std::string> factors_path;
};

struct SchmidtOptions {
  std::string eigenvalue;
  std::optional<std::string> cut;  ///< "1,3" (1-based)
};

struct SymmetryOptions {
  std::optional<std::string> check;
  bool search = false;
  bool commutant_dim = false;
};

/// Each command writes its report to `out`, diagnostics to `err`, and returns
/// the process exit code.
int run_spectrum(const CommonOptions& common, std::ostream& out, std::ostream& err);
int run_charpoly(const CommonOptions& common, const CharpolyOptions& opts, std::ostream& out,
                 std::ostream& err);
int run_schmidt(const CommonOptions& common, const SchmidtOptions& opts, std::ostream& out,
                std::ostream& err);
int run_symmetry(const CommonOptions& common, const SymmetryOptions& opts, std::ostream& out,
                 std::ostream& err);
int run_bound(const CommonOptions& common, std::ostream& out, std::ostream& err);

/// "sqrt3", "-sqrt3/2", "2", "-0.5", "1/4", "3*sqrt2" ...
double parse_eigenvalue_label(const std::string& label);

/// 12 significant digits, negative zero folded to zero.
double round12(double x);

}  // namespace spinlab::cli

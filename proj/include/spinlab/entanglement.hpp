#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinlab/matrix.hpp"
#include "spinlab/tensor_algebra.hpp"

namespace spinlab {

/// Split of tensor factors into `left` and its complement. Indices are 0-based.
struct Bipartition {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> left;

  /// Throws Error(DimensionMismatch) for an empty, full, or out-of-range left set.
  void validate() const;
  std::vector<std::size_t> right() const;
  std::size_t left_dimension() const;
  std::size_t right_dimension() const;
  /// Left factors first, then right factors, each in original relative order.
  FactorPermutation reordering() const;
};

/// Rectangular complex matrix, row-major; only used for coefficient matrices.
struct CoefficientMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> data;

  Complex& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct SchmidtResult {
  std::vector<double> coefficients;  ///< descending, min(left_dim, right_dim) entries
  std::vector<ComplexVector> left_vectors;   ///< one per coefficient above rank_tol
  std::vector<ComplexVector> right_vectors;
  std::size_t rank = 0;
  Bipartition cut;
};

constexpr double kDefaultRankTol = 1e-9;

CoefficientMatrix reshape_for_cut(std::span<const Complex> v, const Bipartition& cut);

/// v = sum_i c_i l_i (x) r_i in cut-sorted factor order, via the Hermitian
/// eigenproblem of the smaller Gram matrix. Throws Error(ZeroVector) for v = 0.
SchmidtResult schmidt(std::span<const Complex> v, const Bipartition& cut,
                      double rank_tol = kDefaultRankTol);

/// sum_i c_i l_i (x) r_i, mapped back to the original factor order.
ComplexVector reconstruct(const SchmidtResult& r);

/// -sum c_i^2 ln c_i^2. Throws Error(NotNormalized) unless sum c_i^2 = 1 within 1e-10.
double entanglement_entropy(const SchmidtResult& r);

/// The two non-degenerate eigenvalues +sqrt3 and -sqrt3 of the
/// photon-graviton-photon coupling.
enum class SqrtThreeBranch { Plus, Minus };

/// Closed-form unit eigenvector for the given branch, in the m = j..-j product
/// basis of C^3 (x) C^5 (x) C^3, exact entries.
std::vector<QuadExt> reference_eigenvector_exact(SqrtThreeBranch branch);
ComplexVector reference_eigenvector(SqrtThreeBranch branch);

/// The three cuts of a three-factor system: {1,3}|{2}, {1}|{2,3}, {1,2}|{3}.
std::vector<Bipartition> tripartite_cuts(const std::vector<std::size_t>& dims);

struct CutCheck {
  Bipartition cut;
  SchmidtResult schmidt;
  double entropy = 0.0;
  double max_coefficient_error = 0.0;  ///< vs 1/sqrt3
  double reconstruction_error = 0.0;
  bool ok = false;
};

struct ReferenceCheck {
  bool matches = false;
  double max_deviation = 0.0;  ///< after global phase alignment
  Complex phase{1.0, 0.0};
  std::optional<std::size_t> first_mismatch;
  std::vector<CutCheck> cuts;
  bool ok() const;
  std::string summary() const;
};

/// Compares a computed unit eigenvector to the closed form up to global phase,
/// then checks every cut for Schmidt rank 3 with coefficients 1/sqrt3.
ReferenceCheck verify_schmidt_against_reference(std::span<const Complex> eigvec,
                                                SqrtThreeBranch branch, double tol = 1e-10);

}  // namespace spinlab

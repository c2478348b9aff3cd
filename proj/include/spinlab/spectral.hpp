#pragma once

#include <vector>

#include "spinlab/matrix.hpp"

namespace spinlab {

struct EigenDecomposition {
  std::vector<double> values;  ///< ascending
  NumericMatrix vectors;       ///< column k pairs with values[k]
  double residual = 0.0;       ///< max_k |A v_k - lambda_k v_k|
  int sweeps = 0;

  ComplexVector column(std::size_t k) const;
};

struct EigenCluster {
  double value = 0.0;  ///< mean of the member eigenvalues
  std::size_t multiplicity = 0;
  std::size_t first_index = 0;  ///< position of the first member in the sorted spectrum
  std::vector<ComplexVector> basis;
};

struct JacobiOptions {
  double hermitian_tol = 1e-12;
  double relative_off_tol = 1e-13;
  int max_sweeps = 50;
};

/// Cyclic complex Jacobi. Throws Error(NotHermitian) if A deviates from A^dagger
/// by more than options.hermitian_tol, Error(NoConvergence) past max_sweeps.
EigenDecomposition hermitian_eigen(const NumericMatrix& a, const JacobiOptions& options = {});

constexpr double kDefaultClusterTol = 1e-6;

/// Greedy gap clustering of an ascending list; no eigenspace bases attached.
std::vector<EigenCluster> cluster_spectrum(const std::vector<double>& values,
                                           double tol = kDefaultClusterTol);
/// Same grouping, with each cluster carrying its columns of `eig.vectors`.
std::vector<EigenCluster> cluster_spectrum(const EigenDecomposition& eig,
                                           double tol = kDefaultClusterTol);

/// max_j sum_l |a_jl|; bounds the modulus of every eigenvalue.
double row_sum_bound(const NumericMatrix& a);
/// Exact variant; throws Error(UnrepresentableRadical) if some |a_jl| leaves the field.
QuadExt row_sum_bound(const ExactMatrix& a);

/// |A v - lambda v|_2; throws Error(NotNormalized) unless |v| = 1 within 1e-12.
double eigen_residual(const NumericMatrix& a, double lambda, std::span<const Complex> v);

}  // namespace spinlab

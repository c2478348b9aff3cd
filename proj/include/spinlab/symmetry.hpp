#pragma once

#include <random>
#include <string>
#include <vector>

#include "spinlab/matrix.hpp"
#include "spinlab/spectral.hpp"
#include "spinlab/tensor_algebra.hpp"

namespace spinlab {

/// P e_k = e_{image[k]}.
class PermutationMatrix {
 public:
  PermutationMatrix() = default;
  /// Throws Error(InvalidPermutation) unless `image` is a bijection.
  explicit PermutationMatrix(std::vector<std::size_t> image);

  static PermutationMatrix identity(std::size_t n);
  static PermutationMatrix from_factor_permutation(const FactorPermutation& fp);

  std::size_t size() const { return image_.size(); }
  const std::vector<std::size_t>& image() const { return image_; }

  template <typename T>
  Matrix<T> to_matrix() const {
    Matrix<T> out(size());
    for (std::size_t k = 0; k < size(); ++k) out(image_[k], k) = ScalarTraits<T>::one();
    return out;
  }

  /// (this * other) e_k = this(other(e_k))
  PermutationMatrix compose(const PermutationMatrix& other) const;
  PermutationMatrix inverse() const;

  /// "[3 2 1]" (1-based image of e_1, e_2, ...)
  std::string one_line() const;

  friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;
  friend auto operator<=>(const PermutationMatrix&, const PermutationMatrix&) = default;

 private:
  std::vector<std::size_t> image_;
};

PermutationMatrix kron(const PermutationMatrix& a, const PermutationMatrix& b);

/// Counter-diagonal permutation, k -> n-1-k.
PermutationMatrix not_gate(std::size_t n);

/// Parses "not x id x not" style products of per-factor permutations; `dims`
/// supplies each factor's dimension. Throws Error(Parse).
PermutationMatrix parse_factor_product(const std::string& text, const std::vector<std::size_t>& dims);

struct SymmetryCheck {
  bool holds = false;
  double max_deviation = 0.0;
};

/// M^dagger K M == K, exactly.
SymmetryCheck is_symmetry(const ExactMatrix& m, const ExactMatrix& k);
/// M^dagger K M == K within tol (max entry).
SymmetryCheck is_symmetry(const NumericMatrix& m, const NumericMatrix& k, double tol);
/// P^T K P == K, exactly, without forming P.
SymmetryCheck is_symmetry(const PermutationMatrix& p, const ExactMatrix& k);
SymmetryCheck is_symmetry(const PermutationMatrix& p, const NumericMatrix& k, double tol);

/// Candidate per-factor permutations: identity and the NOT gate on each factor.
std::vector<std::vector<PermutationMatrix>> default_factor_generators(const HamiltonianSpec& spec);

/// Every product of per-factor candidates, optionally composed with a
/// dimension-preserving reordering of factors, that leaves the exact
/// Hamiltonian invariant. Sorted by image, no duplicates.
std::vector<PermutationMatrix> search_factor_symmetries(
    const HamiltonianSpec& spec, const std::vector<std::vector<PermutationMatrix>>& generators,
    bool include_factor_swaps = true);

/// Cluster order used for U: clusters with nonzero eigenvalue grouped by
/// multiplicity (largest first), ascending value inside each group, then the
/// kernel. For the photon-graviton coupling this yields block sizes
/// 6,6,6,6,3,3,3,3,1,1,7.
std::vector<std::size_t> commutant_block_order(const std::vector<EigenCluster>& clusters,
                                               double zero_tol = kDefaultClusterTol);

/// One unitary block per cluster, listed in commutant_block_order.
struct CommutantSpec {
  std::vector<NumericMatrix> blocks;
};

/// U (direct sum of blocks) U^dagger, U's columns the cluster bases in
/// commutant_block_order. Throws Error(BlockSizeMismatch).
NumericMatrix commutant_symmetry(const std::vector<EigenCluster>& clusters, const CommutantSpec& spec);

std::size_t commutant_dimension(const std::vector<EigenCluster>& clusters);

/// Haar-ish random unitary (Gram-Schmidt on a complex Gaussian matrix).
NumericMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

/// max_j |(I - Pi_j) M Pi_j|_max over cluster projectors Pi_j.
double eigenspace_leakage(const NumericMatrix& m, const std::vector<EigenCluster>& clusters);

}  // namespace spinlab

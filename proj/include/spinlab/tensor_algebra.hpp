#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinlab/matrix.hpp"
#include "spinlab/spin_matrices.hpp"

namespace spinlab {

/// One factor's operator inside a coupling term: a spin component, or the
/// identity when `axis` is empty (written "id" in spec files).
struct TermOperator {
  std::optional<SpinAxis> axis;

  static TermOperator identity() { return {}; }
  friend bool operator==(const TermOperator&, const TermOperator&) = default;
};

/// H / (hbar*omega) = sum over terms of S^(1)_{a1} (x) S^(2)_{a2} (x) ...
struct HamiltonianSpec {
  std::vector<Spin> factors;
  std::vector<std::vector<TermOperator>> terms;
  std::string scale_note = "H/(hbar*omega), dimensionless";

  std::vector<std::size_t> dims() const;
  std::size_t dimension() const;
  /// Throws Error(MalformedSpec) when a term does not carry one operator per factor.
  void validate() const;

  /// The diagonal coupling sum_a S_a (x) S_a (x) ... over a = x, y, z.
  static HamiltonianSpec diagonal_coupling(std::vector<Spin> factors);
};

/// {"factors": ["1","2","1"], "terms": [["x","x","x"], ...]}
HamiltonianSpec parse_hamiltonian_spec(std::string_view json_text);
HamiltonianSpec load_hamiltonian_spec(const std::string& path);
std::string to_json(const HamiltonianSpec& spec);

/// Photon-graviton-photon coupling on C^3 (x) C^5 (x) C^3.
HamiltonianSpec photon_graviton_spec();
/// Spin-1/2, spin-2, spin-1/2 coupling (20 x 20).
HamiltonianSpec spin_half_graviton_spec();
/// Spin-1/2, spin-1, spin-1/2 coupling (12 x 12).
HamiltonianSpec spin_half_photon_spec();

template <typename T>
Matrix<T> build_hamiltonian(const HamiltonianSpec& spec);

extern template Matrix<QuadExt> build_hamiltonian<QuadExt>(const HamiltonianSpec&);
extern template Matrix<Complex> build_hamiltonian<Complex>(const HamiltonianSpec&);

/// Reorders tensor factors. New slot t holds old factor `order[t]`, so the
/// induced matrix maps e_{i_0} (x) ... (x) e_{i_{k-1}} to
/// e_{i_order[0]} (x) ... (x) e_{i_order[k-1]}.
struct FactorPermutation {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> order;

  /// Throws Error(InvalidPermutation) unless `order` is a bijection on slots.
  void validate() const;
  std::size_t dimension() const;
  std::vector<std::size_t> permuted_dims() const;
  /// Image of every flat basis index.
  std::vector<std::size_t> index_map() const;
};

template <typename T>
Matrix<T> factor_permutation_matrix(const FactorPermutation& fp) {
  fp.validate();
  const auto map = fp.index_map();
  Matrix<T> out(map.size());
  for (std::size_t k = 0; k < map.size(); ++k) out(map[k], k) = ScalarTraits<T>::one();
  return out;
}

ComplexVector permute_factors(std::span<const Complex> v, const FactorPermutation& fp);

}  // namespace spinlab

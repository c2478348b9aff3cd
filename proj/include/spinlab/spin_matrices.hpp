#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinlab/matrix.hpp"

namespace spinlab {

/// Spin quantum number j, stored as 2j so half-integers stay exact.
class Spin {
 public:
  constexpr Spin() = default;
  constexpr explicit Spin(int twice_j) : twice_j_(twice_j) {
    if (twice_j < 0) throw Error(ErrorKind::MalformedSpec, "negative spin");
  }
  static constexpr Spin half() { return Spin(1); }
  static constexpr Spin integer(int j) { return Spin(2 * j); }

  constexpr int twice_j() const { return twice_j_; }
  constexpr std::size_t dimension() const { return static_cast<std::size_t>(twice_j_) + 1; }
  constexpr double value() const { return twice_j_ / 2.0; }

  friend constexpr bool operator==(Spin, Spin) = default;

 private:
  int twice_j_ = 0;
};

/// "1/2", "1", "3/2", ...
Spin parse_spin(std::string_view text);
std::string to_string(Spin s);

/// x <-> 1, y <-> 2, z <-> 3.
enum class SpinAxis { X = 1, Y = 2, Z = 3 };

SpinAxis parse_axis(std::string_view text);
const char* to_string(SpinAxis axis);

/// Raising operator in the basis m = j, j-1, ..., -j.
template <typename T>
Matrix<T> ladder_plus(Spin j);

/// S1 = (S+ + S-)/2, S2 = (S+ - S-)/(2i), S3 = diag(j, ..., -j).
/// With T = QuadExt this throws Error(UnrepresentableRadical) for spins whose
/// ladder coefficients leave Q(sqrt2, sqrt3), e.g. j = 5/2.
template <typename T>
Matrix<T> spin_matrix(Spin j, SpinAxis axis);

extern template Matrix<QuadExt> ladder_plus<QuadExt>(Spin);
extern template Matrix<Complex> ladder_plus<Complex>(Spin);
extern template Matrix<QuadExt> spin_matrix<QuadExt>(Spin, SpinAxis);
extern template Matrix<Complex> spin_matrix<Complex>(Spin, SpinAxis);

struct SpinEigenpair {
  double m;
  ComplexVector vector;
};

/// Eigenpairs of spin_matrix(j, axis) ordered m = j, ..., -j, each vector unit
/// norm with its largest-magnitude component (first one on ties) real positive.
std::vector<SpinEigenpair> spin_eigenbasis(Spin j, SpinAxis axis);

}  // namespace spinlab

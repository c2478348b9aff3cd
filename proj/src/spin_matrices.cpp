#include "spinlab/spin_matrices.hpp"

#include <algorithm>
#include <charconv>

#include "spinlab/spectral.hpp"

namespace spinlab {

namespace {

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(ErrorKind::MalformedSpec, "bad integer '" + std::string(text) + "'");
  return value;
}

}  // namespace

Spin parse_spin(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (text.substr(slash + 1) != "2")
      throw Error(ErrorKind::MalformedSpec, "spin must be a multiple of 1/2: '" +
                                                std::string(text) + "'");
    int twice = parse_int(text.substr(0, slash));
    if (twice < 0) throw Error(ErrorKind::MalformedSpec, "negative spin");
    return Spin(twice);
  }
  int j = parse_int(text);
  if (j < 0) throw Error(ErrorKind::MalformedSpec, "negative spin");
  return Spin(2 * j);
}

std::string to_string(Spin s) {
  if (s.twice_j() % 2 == 0) return std::to_string(s.twice_j() / 2);
  return std::to_string(s.twice_j()) + "/2";
}

SpinAxis parse_axis(std::string_view text) {
  if (text == "x" || text == "1") return SpinAxis::X;
  if (text == "y" || text == "2") return SpinAxis::Y;
  if (text == "z" || text == "3") return SpinAxis::Z;
  throw Error(ErrorKind::MalformedSpec, "unknown axis '" + std::string(text) + "'");
}

const char* to_string(SpinAxis axis) {
  switch (axis) {
    case SpinAxis::X: return "x";
    case SpinAxis::Y: return "y";
    case SpinAxis::Z: return "z";
  }
  return "?";
}

template <typename T>
Matrix<T> ladder_plus(Spin j) {
  using S = ScalarTraits<T>;
  const int tj = j.twice_j();
  Matrix<T> out(j.dimension());
  // Column k holds 2m = tj - 2k; <m+1|S+|m> = sqrt((j - m)(j + m + 1)).
  for (int k = 1; k <= tj; ++k) {
    const int tm = tj - 2 * k;
    const auto n = static_cast<std::uint64_t>((tj - tm) * (tj + tm + 2) / 4);
    out(k - 1, k) = S::sqrt_int(n, 1, 1);
  }
  return out;
}

template <typename T>
Matrix<T> spin_matrix(Spin j, SpinAxis axis) {
  using S = ScalarTraits<T>;
  switch (axis) {
    case SpinAxis::X: {
      Matrix<T> plus = ladder_plus<T>(j);
      return (plus + plus.adjoint()) * S::rational(1, 2);
    }
    case SpinAxis::Y: {
      Matrix<T> plus = ladder_plus<T>(j);
      // 1/(2i) = -i/2
      return (plus - plus.adjoint()) * (S::i() * S::rational(-1, 2));
    }
    case SpinAxis::Z: {
      Matrix<T> out(j.dimension());
      for (std::size_t k = 0; k < j.dimension(); ++k)
        out(k, k) = S::rational(j.twice_j() - 2 * static_cast<long>(k), 2);
      return out;
    }
  }
  throw Error(ErrorKind::MalformedSpec, "unknown axis");
}

template Matrix<QuadExt> ladder_plus<QuadExt>(Spin);
template Matrix<Complex> ladder_plus<Complex>(Spin);
template Matrix<QuadExt> spin_matrix<QuadExt>(Spin, SpinAxis);
template Matrix<Complex> spin_matrix<Complex>(Spin, SpinAxis);

std::vector<SpinEigenpair> spin_eigenbasis(Spin j, SpinAxis axis) {
  EigenDecomposition eig = hermitian_eigen(spin_matrix<Complex>(j, axis));
  const std::size_t n = j.dimension();
  std::vector<SpinEigenpair> out;
  out.reserve(n);
  for (std::size_t k = n; k-- > 0;) {
    ComplexVector v = eig.column(k);
    double largest = 0.0;
    for (const auto& x : v) largest = std::max(largest, std::abs(x));
    auto pivot = std::find_if(v.begin(), v.end(), [&](const Complex& x) {
      return std::abs(x) >= largest - 1e-12;
    });
    const Complex phase = std::conj(*pivot) / std::abs(*pivot);
    for (auto& x : v) x *= phase;
    *pivot = std::abs(*pivot);
    // Eigenvalues are exactly j, ..., -j; report them exactly.
    out.push_back({j.value() - static_cast<double>(n - 1 - k), std::move(v)});
  }
  return out;
}

}  // namespace spinlab

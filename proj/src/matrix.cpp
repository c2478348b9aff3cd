#include "spinlab/matrix.hpp"

#include <algorithm>

namespace spinlab {

NumericMatrix to_numeric(const ExactMatrix& a) {
  NumericMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      if (!a(r, c).is_zero()) out(r, c) = ef_to_complex(a(r, c));
  return out;
}

double max_abs(const NumericMatrix& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

double frobenius_norm(const NumericMatrix& a) {
  double s = 0.0;
  for (const auto& x : a.data()) s += std::norm(x);
  return std::sqrt(s);
}

double hermiticity_defect(const NumericMatrix& a) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = r; c < a.size(); ++c)
      m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
  return m;
}

ComplexVector multiply(const NumericMatrix& a, std::span<const Complex> v) {
  if (v.size() != a.size())
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector product: size mismatch");
  ComplexVector out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    Complex s{};
    for (std::size_t c = 0; c < a.size(); ++c) s += a(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch, "inner product: size mismatch");
  Complex s{};
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

}  // namespace spinlab

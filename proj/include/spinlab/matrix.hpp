#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "spinlab/error.hpp"
#include "spinlab/exact_field.hpp"

namespace spinlab {

/// Per-scalar hooks used by the generic matrix code.
template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<QuadExt> {
  static QuadExt zero() { return {}; }
  static QuadExt one() { return 1; }
  static QuadExt i() { return QuadExt::imaginary_unit(); }
  static QuadExt conj(const QuadExt& a) { return ef_conj(a); }
  static bool is_zero(const QuadExt& a) { return a.is_zero(); }
  static QuadExt rational(long num, long den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
  }
  static QuadExt sqrt_int(std::uint64_t n, long num, long den) {
    BigRational scale(num, den);
    scale.canonicalize();
    return ef_from_sqrt_int(n, scale);
  }
};

template <>
struct ScalarTraits<Complex> {
  static Complex zero() { return {}; }
  static Complex one() { return 1.0; }
  static Complex i() { return {0.0, 1.0}; }
  static Complex conj(const Complex& a) { return std::conj(a); }
  static bool is_zero(const Complex& a) { return a == Complex{}; }
  static Complex rational(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static Complex sqrt_int(std::uint64_t n, long num, long den) {
    return std::sqrt(static_cast<double>(n)) * static_cast<double>(num) /
           static_cast<double>(den);
  }
};

/// Dense square matrix, row-major.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, ScalarTraits<T>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = ScalarTraits<T>::one();
    return m;
  }

  std::size_t size() const { return n_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }
  const std::vector<T>& data() const { return data_; }

  Matrix& operator+=(const Matrix& o) {
    require_same(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  // Zero entries are skipped: coupled spin Hamiltonians are sparse and exact
  // products are expensive.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_same(b, "*");
    const std::size_t n = a.n_;
    Matrix out(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        const T& ark = a(r, k);
        if (ScalarTraits<T>::is_zero(ark)) continue;
        for (std::size_t c = 0; c < n; ++c) {
          const T& bkc = b(k, c);
          if (ScalarTraits<T>::is_zero(bkc)) continue;
          out(r, c) += ark * bkc;
        }
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

  Matrix adjoint() const {
    Matrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) out(c, r) = ScalarTraits<T>::conj((*this)(r, c));
    return out;
  }

  Matrix transpose() const {
    Matrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t c = 0; c < n_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  void require_same(const Matrix& o, const char* op) const {
    if (n_ != o.n_)
      throw Error(ErrorKind::DimensionMismatch,
                  std::string("matrix ") + op + ": " + std::to_string(n_) + " vs " +
                      std::to_string(o.n_));
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<QuadExt>;
using NumericMatrix = Matrix<Complex>;
using ComplexVector = std::vector<Complex>;

template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  a.require_same(b, "commutator");
  return a * b - b * a;
}

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  Matrix<T> out(n * m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const T& arc = a(r, c);
      if (ScalarTraits<T>::is_zero(arc)) continue;
      for (std::size_t rr = 0; rr < m; ++rr)
        for (std::size_t cc = 0; cc < m; ++cc) {
          const T& b_entry = b(rr, cc);
          if (ScalarTraits<T>::is_zero(b_entry)) continue;
          out(r * m + rr, c * m + cc) = arc * b_entry;
        }
    }
  return out;
}

template <typename T>
T trace(const Matrix<T>& a) {
  T sum = ScalarTraits<T>::zero();
  for (std::size_t k = 0; k < a.size(); ++k) sum += a(k, k);
  return sum;
}

template <typename T>
bool is_hermitian_exact(const Matrix<T>& a) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = r; c < a.size(); ++c)
      if (!(a(r, c) == ScalarTraits<T>::conj(a(c, r)))) return false;
  return true;
}

NumericMatrix to_numeric(const ExactMatrix& a);

/// Largest entrywise modulus.
double max_abs(const NumericMatrix& a);
double frobenius_norm(const NumericMatrix& a);
double hermiticity_defect(const NumericMatrix& a);

ComplexVector multiply(const NumericMatrix& a, std::span<const Complex> v);
ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);
/// <a|b>, conjugate-linear in the first argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace spinlab

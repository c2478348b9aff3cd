#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spinlab/matrix.hpp"

namespace spinlab {

/// Polynomial in lambda over Q(sqrt2, sqrt3)(i); coefficients()[k] multiplies lambda^k.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<QuadExt> coefficients);

  static ExactPolynomial monomial(std::size_t degree, const QuadExt& coeff = 1);
  /// From coefficients listed highest degree first.
  static ExactPolynomial from_descending(const std::vector<QuadExt>& coefficients);

  const std::vector<QuadExt>& coefficients() const { return coeffs_; }
  /// Zero polynomial reports degree 0.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const QuadExt& operator[](std::size_t k) const { return coeffs_[k]; }
  QuadExt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : QuadExt{}; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  /// True when every coefficient is a plain rational.
  bool has_rational_coefficients() const;
  bool has_integer_coefficients() const;

  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<QuadExt> coeffs_;
};

/// det(lambda I - A) by Faddeev-LeVerrier: monic, lambda^{n-1} coefficient
/// -tr(A), constant term (-1)^n det(A).
ExactPolynomial char_poly_exact(const ExactMatrix& a);

ExactPolynomial poly_expand(const std::vector<std::pair<ExactPolynomial, unsigned>>& factors);

QuadExt poly_eval(const ExactPolynomial& p, const QuadExt& x);
Complex poly_eval(const ExactPolynomial& p, Complex x);
/// dp/dlambda
ExactPolynomial poly_derivative(const ExactPolynomial& p);

/// Divides out (lambda - r)^m for every (r, m), checking a zero remainder at
/// every step; throws Error(NonzeroRemainder) otherwise.
ExactPolynomial poly_divide_linear_factors(
    const ExactPolynomial& p, const std::vector<std::pair<QuadExt, unsigned>>& roots);

/// "x^4 - 9*x^2 + 12" style rendering with rational coefficients, otherwise
/// each coefficient in parentheses.
std::string to_string(const ExactPolynomial& p, const std::string& var = "lambda");
/// Coefficients highest degree first, each via to_string(QuadExt).
std::vector<std::string> descending_coefficients(const ExactPolynomial& p);

}  // namespace spinlab

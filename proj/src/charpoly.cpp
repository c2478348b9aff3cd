#include "spinlab/charpoly.hpp"

namespace spinlab {

ExactPolynomial::ExactPolynomial(std::vector<QuadExt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void ExactPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactPolynomial ExactPolynomial::monomial(std::size_t degree, const QuadExt& coeff) {
  std::vector<QuadExt> c(degree + 1);
  c[degree] = coeff;
  return ExactPolynomial(std::move(c));
}

ExactPolynomial ExactPolynomial::from_descending(const std::vector<QuadExt>& coefficients) {
  return ExactPolynomial(std::vector<QuadExt>(coefficients.rbegin(), coefficients.rend()));
}

bool ExactPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == QuadExt(1); }

bool ExactPolynomial::has_rational_coefficients() const {
  for (const auto& c : coeffs_)
    if (!c.is_rational()) return false;
  return true;
}

bool ExactPolynomial::has_integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (!c.is_rational() || c.re(0).get_den() != 1) return false;
  return true;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QuadExt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ExactPolynomial(std::move(out));
}

ExactPolynomial char_poly_exact(const ExactMatrix& a) {
  const std::size_t n = a.size();
  std::vector<QuadExt> c(n + 1);
  c[n] = 1;
  // M_1 = I; c_{n-k} = -tr(A M_k) / k; M_{k+1} = A M_k + c_{n-k} I.
  ExactMatrix m = ExactMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix am = a * m;
    QuadExt coeff = -trace(am) * QuadExt(BigRational(1, static_cast<long>(k)));
    c[n - k] = coeff;
    if (k == n) break;
    for (std::size_t d = 0; d < n; ++d) am(d, d) += coeff;
    m = std::move(am);
  }
  return ExactPolynomial(std::move(c));
}

ExactPolynomial poly_expand(const std::vector<std::pair<ExactPolynomial, unsigned>>& factors) {
  ExactPolynomial out = ExactPolynomial::monomial(0);
  for (const auto& [factor, power] : factors)
    for (unsigned e = 0; e < power; ++e) out = out * factor;
  return out;
}

QuadExt poly_eval(const ExactPolynomial& p, const QuadExt& x) {
  QuadExt acc;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

Complex poly_eval(const ExactPolynomial& p, Complex x) {
  Complex acc{};
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + ef_to_complex(c[k]);
  return acc;
}

ExactPolynomial poly_derivative(const ExactPolynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<QuadExt> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * QuadExt(static_cast<long>(k));
  return ExactPolynomial(std::move(out));
}

namespace {

// Synthetic division by (lambda - r); returns {quotient, remainder}.
std::pair<ExactPolynomial, QuadExt> divide_linear(const ExactPolynomial& p, const QuadExt& r) {
  const auto& c = p.coefficients();
  if (c.empty()) return {{}, {}};
  std::vector<QuadExt> q(c.size() - 1);
  QuadExt carry = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + carry * r;
  }
  return {ExactPolynomial(std::move(q)), carry};
}

}  // namespace

ExactPolynomial poly_divide_linear_factors(
    const ExactPolynomial& p, const std::vector<std::pair<QuadExt, unsigned>>& roots) {
  ExactPolynomial current = p;
  for (const auto& [root, multiplicity] : roots)
    for (unsigned m = 0; m < multiplicity; ++m) {
      auto [quotient, remainder] = divide_linear(current, root);
      if (!remainder.is_zero())
        throw Error(ErrorKind::NonzeroRemainder,
                    "dividing by (lambda - (" + to_string(root) + ")) for the " +
                        std::to_string(m + 1) + "-th time leaves remainder " +
                        to_string(remainder));
      current = std::move(quotient);
    }
  return current;
}

std::string to_string(const ExactPolynomial& p, const std::string& var) {
  const auto& c = p.coefficients();
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string coeff;
    bool negative = false;
    if (c[k].is_rational()) {
      BigRational q = c[k].re(0);
      negative = sgn(q) < 0;
      if (negative) q = -q;
      if (q != 1 || k == 0) coeff = q.get_str();
    } else {
      coeff = "(" + to_string(c[k]) + ")";
    }
    std::string term = coeff.empty() ? power : (power.empty() ? coeff : coeff + "*" + power);
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

std::vector<std::string> descending_coefficients(const ExactPolynomial& p) {
  std::vector<std::string> out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) out.push_back(to_string(c[k]));
  return out;
}

}  // namespace spinlab

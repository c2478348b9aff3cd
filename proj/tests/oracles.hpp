#pragma once

// Test-only reference computations. None of these share code paths with the
// library routines they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "spinlab/exact_field.hpp"
#include "spinlab/matrix.hpp"

namespace oracle {

using spinlab::BigRational;
using spinlab::Complex;
using spinlab::QuadExt;

inline QuadExt sqrt2() { return QuadExt::radical(QuadExt::kSqrt2); }
inline QuadExt sqrt3() { return QuadExt::radical(QuadExt::kSqrt3); }
inline QuadExt sqrt6() { return QuadExt::radical(QuadExt::kSqrt6); }
inline QuadExt I() { return QuadExt::imaginary_unit(); }
inline BigRational rat(long num, long den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}
inline QuadExt q(long num, long den) { return rat(num, den); }

inline spinlab::ExactMatrix exact(std::size_t n, const std::vector<QuadExt>& rows) {
  spinlab::ExactMatrix m(n);
  for (std::size_t k = 0; k < rows.size(); ++k) m(k / n, k % n) = rows[k];
  return m;
}

/// Small random element: each of the eight coordinates p/q with |p| <= 6, 1 <= q <= 4,
/// about half of them zero.
inline QuadExt random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  std::bernoulli_distribution keep(0.5);
  std::array<BigRational, 4> re;
  std::array<BigRational, 4> im;
  for (int k = 0; k < 4; ++k) {
    if (keep(rng)) {
      re[k] = BigRational(num(rng), den(rng));
      re[k].canonicalize();
    }
    if (keep(rng)) {
      im[k] = BigRational(num(rng), den(rng));
      im[k].canonicalize();
    }
  }
  return QuadExt::from_coords(re, im);
}

/// Plain double evaluation from coordinates, independent of ef_to_complex.
inline Complex approx(const QuadExt& a) {
  const double r[4] = {1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(6.0)};
  Complex out{};
  for (int k = 0; k < 4; ++k) out += Complex(a.re(k).get_d() * r[k], a.im(k).get_d() * r[k]);
  return out;
}

/// Durand-Kerner iteration for all roots of a monic complex polynomial given
/// highest degree first.
inline std::vector<Complex> polynomial_roots(std::vector<Complex> desc) {
  const std::size_t n = desc.size() - 1;
  const Complex lead = desc.front();
  for (auto& c : desc) c /= lead;
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k) radius = std::max(radius, std::abs(desc[k]));
  radius += 1.0;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = radius * std::polar(1.0, 2.0 * M_PI * (k + 0.25) / static_cast<double>(n));
  auto eval = [&](Complex x) {
    Complex acc{};
    for (const auto& c : desc) acc = acc * x + c;
    return acc;
  };
  for (int iter = 0; iter < 5000; ++iter) {
    double change = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex denom = 1.0;
      for (std::size_t l = 0; l < n; ++l)
        if (l != k) denom *= z[k] - z[l];
      const Complex step = eval(z[k]) / denom;
      z[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  // Newton polish on the undivided polynomial.
  for (auto& x : z) {
    for (int k = 0; k < 3; ++k) {
      Complex p{};
      Complex dp{};
      for (const auto& c : desc) {
        dp = dp * x + p;
        p = p * x + c;
      }
      if (std::abs(dp) > 1e-300) x -= p / dp;
    }
  }
  return z;
}

inline double max_abs_diff(const spinlab::NumericMatrix& a, const spinlab::NumericMatrix& b) {
  double out = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out = std::max(out, std::abs(a(r, c) - b(r, c)));
  return out;
}

inline spinlab::NumericMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  spinlab::NumericMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = g(rng);
    for (std::size_t c = r + 1; c < n; ++c) {
      a(r, c) = Complex(g(rng), g(rng));
      a(c, r) = std::conj(a(r, c));
    }
  }
  return a;
}

/// Hermitian with random_element entries; the diagonal keeps only real parts.
inline spinlab::ExactMatrix random_hermitian_exact(std::size_t n, std::mt19937_64& rng) {
  spinlab::ExactMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    const QuadExt d = random_element(rng);
    a(r, r) = (d + spinlab::ef_conj(d)) * q(1, 2);
    for (std::size_t c = r + 1; c < n; ++c) {
      a(r, c) = random_element(rng);
      a(c, r) = spinlab::ef_conj(a(r, c));
    }
  }
  return a;
}

}  // namespace oracle

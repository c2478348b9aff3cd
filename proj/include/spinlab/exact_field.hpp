#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace spinlab {

using BigRational = mpq_class;
using Complex = std::complex<double>;

/// Exact element of Q(sqrt2, sqrt3)(i).
///
/// Stored as eight rational coordinates over the basis
///   1, sqrt2, sqrt3, sqrt6, i, i*sqrt2, i*sqrt3, i*sqrt6.
/// The four radical slots are indexed by a two-bit mask (bit 0 = sqrt2,
/// bit 1 = sqrt3), which makes the multiplication table an XOR.
class QuadExt {
 public:
  enum Radical : int { kOne = 0, kSqrt2 = 1, kSqrt3 = 2, kSqrt6 = 3 };

  QuadExt() = default;
  QuadExt(long value);  // NOLINT(google-explicit-constructor)
  QuadExt(const BigRational& value);  // NOLINT(google-explicit-constructor)

  static QuadExt from_coords(const std::array<BigRational, 4>& re,
                             const std::array<BigRational, 4>& im);
  static QuadExt radical(Radical r, const BigRational& scale = 1);
  static QuadExt imaginary_unit();

  const BigRational& re(int radical) const { return re_[radical]; }
  const BigRational& im(int radical) const { return im_[radical]; }
  const std::array<BigRational, 4>& re_coords() const { return re_; }
  const std::array<BigRational, 4>& im_coords() const { return im_; }

  bool is_zero() const;
  bool is_real() const;
  /// True when every coordinate except the rational real part vanishes.
  bool is_rational() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
  QuadExt operator-() const;

  friend bool operator==(const QuadExt& a, const QuadExt& b);
  friend bool operator!=(const QuadExt& a, const QuadExt& b) {
    return !(a == b);
  }

 private:
  std::array<BigRational, 4> re_{};
  std::array<BigRational, 4> im_{};
};

QuadExt ef_add(const QuadExt& a, const QuadExt& b);
QuadExt ef_mul(const QuadExt& a, const QuadExt& b);
QuadExt ef_conj(const QuadExt& a);
/// Throws Error(DivisionByZero) for a == 0.
QuadExt ef_inv(const QuadExt& a);

/// scale * sqrt(n). Throws Error(UnrepresentableRadical) when the square-free
/// part of n is not one of 1, 2, 3, 6.
QuadExt ef_from_sqrt_int(std::uint64_t n, const BigRational& scale = 1);

Complex ef_to_complex(const QuadExt& a);

/// Non-negative square root of a real, non-negative element, when it lies in
/// Q(sqrt2, sqrt3). Throws Error(UnrepresentableRadical) otherwise.
QuadExt ef_sqrt_real(const QuadExt& a);

/// Exact modulus |a| = sqrt(a * conj(a)); same failure mode as ef_sqrt_real.
QuadExt ef_abs(const QuadExt& a);

/// Renders as e.g. "1/2 + (3/4)*sqrt6 + i*(-1)*sqrt2"; zero renders as "0".
std::string to_string(const QuadExt& a);
/// Parses the to_string format. Also accepts bare "sqrtN", "i", "i*sqrtN".
QuadExt parse_quadext(std::string_view text);

}  // namespace spinlab

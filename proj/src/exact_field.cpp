#include "spinlab/exact_field.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "spinlab/error.hpp"

namespace spinlab {

namespace {

using Coords = std::array<BigRational, 4>;

constexpr long radical_factor(int a, int b) {
  long f = 1;
  if ((a & b & 1) != 0) f *= 2;
  if ((a & b & 2) != 0) f *= 3;
  return f;
}

// Product in the real subfield Q(sqrt2, sqrt3).
Coords mul_real(const Coords& a, const Coords& b) {
  Coords out{};
  for (int i = 0; i < 4; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (sgn(b[j]) == 0) continue;
      BigRational term = a[i] * b[j];
      if (long f = radical_factor(i, j); f != 1) term *= f;
      out[i ^ j] += term;
    }
  }
  return out;
}

Coords add_real(Coords a, const Coords& b) {
  for (int i = 0; i < 4; ++i) a[i] += b[i];
  return a;
}

Coords sub_real(Coords a, const Coords& b) {
  for (int i = 0; i < 4; ++i) a[i] -= b[i];
  return a;
}

bool is_zero_real(const Coords& a) {
  for (const auto& c : a)
    if (sgn(c) != 0) return false;
  return true;
}

// Galois automorphism flipping the sign of every coordinate carrying `bit`.
Coords galois(Coords a, int bit) {
  for (int i = 0; i < 4; ++i)
    if ((i & bit) != 0) a[i] = -a[i];
  return a;
}

Coords inv_real(const Coords& r) {
  Coords s2 = galois(r, 1);
  Coords t = mul_real(r, s2);  // in Q(sqrt3)
  Coords s3 = galois(t, 2);
  Coords u = mul_real(t, s3);  // rational
  if (sgn(u[0]) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Coords out = mul_real(s2, s3);
  for (auto& c : out) c /= u[0];
  return out;
}

std::optional<BigRational> rational_sqrt(const BigRational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
      mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return std::nullopt;
  mpz_class rn = sqrt(num);
  mpz_class rd = sqrt(den);
  return BigRational(rn, rd);
}

// Element a + b*sqrt2 of Q(sqrt2), carried in slots 0 and 1 of Coords.
Coords lift2(const BigRational& a, const BigRational& b) {
  Coords out{};
  out[0] = a;
  out[1] = b;
  return out;
}

// Some square root of x = x[0] + x[1]*sqrt2 inside Q(sqrt2), if one exists.
std::optional<Coords> sqrt_q2(const Coords& x) {
  const BigRational& a = x[0];
  const BigRational& b = x[1];
  BigRational norm = a * a - 2 * b * b;
  auto n = rational_sqrt(norm);
  if (!n) return std::nullopt;
  for (int sign : {1, -1}) {
    BigRational g2 = (a + sign * *n) / 2;
    auto g = rational_sqrt(g2);
    if (!g) continue;
    Coords y;
    if (sgn(*g) != 0) {
      y = lift2(*g, b / (2 * *g));
    } else {
      auto d = rational_sqrt(a / 2);
      if (!d) continue;
      y = lift2(0, *d);
    }
    if (mul_real(y, y) == lift2(a, b)) return y;
  }
  return std::nullopt;
}

Coords inv_q2(const Coords& x) {
  BigRational norm = x[0] * x[0] - 2 * x[1] * x[1];
  return lift2(x[0] / norm, -x[1] / norm);
}

// x = alpha + beta*sqrt3 with alpha, beta in Q(sqrt2).
std::optional<Coords> sqrt_q23(const Coords& x) {
  Coords alpha = lift2(x[0], x[1]);
  Coords beta = lift2(x[2], x[3]);
  Coords norm = sub_real(mul_real(alpha, alpha),
                         mul_real(lift2(3, 0), mul_real(beta, beta)));
  auto nu = sqrt_q2(norm);
  if (!nu) return std::nullopt;
  for (int sign : {1, -1}) {
    Coords g2 = add_real(alpha, mul_real(lift2(sign, 0), *nu));
    for (auto& c : g2) c /= 2;
    Coords gamma;
    Coords delta;
    if (is_zero_real(g2)) {
      Coords d2 = alpha;
      for (auto& c : d2) c /= 3;
      auto d = sqrt_q2(d2);
      if (!d) continue;
      gamma = Coords{};
      delta = *d;
    } else {
      auto g = sqrt_q2(g2);
      if (!g) continue;
      gamma = *g;
      Coords two_gamma_inv = inv_q2(*g);
      for (auto& c : two_gamma_inv) c /= 2;
      delta = mul_real(beta, two_gamma_inv);
    }
    Coords y{gamma[0], gamma[1], delta[0], delta[1]};
    if (mul_real(y, y) == x) return y;
  }
  return std::nullopt;
}

const mpf_class& high_precision_sqrt(int radical) {
  constexpr mp_bitcnt_t kBits = 256;
  static const std::array<mpf_class, 4> roots = [] {
    std::array<mpf_class, 4> r{mpf_class(1, kBits), mpf_class(2, kBits),
                               mpf_class(3, kBits), mpf_class(6, kBits)};
    for (int i = 1; i < 4; ++i) r[i] = sqrt(r[i]);
    return r;
  }();
  return roots[radical];
}

double evaluate_coords(const Coords& c) {
  mpf_class sum(0, 256);
  for (int i = 0; i < 4; ++i) {
    if (sgn(c[i]) == 0) continue;
    mpf_class term(c[i], 256);
    sum += term * high_precision_sqrt(i);
  }
  return sum.get_d();
}

constexpr const char* kRadicalNames[4] = {"", "sqrt2", "sqrt3", "sqrt6"};

}  // namespace

QuadExt::QuadExt(long value) { re_[0] = value; }

QuadExt::QuadExt(const BigRational& value) {
  re_[0] = value;
  re_[0].canonicalize();
}

QuadExt QuadExt::from_coords(const std::array<BigRational, 4>& re,
                             const std::array<BigRational, 4>& im) {
  QuadExt out;
  out.re_ = re;
  out.im_ = im;
  for (auto& c : out.re_) c.canonicalize();
  for (auto& c : out.im_) c.canonicalize();
  return out;
}

QuadExt QuadExt::radical(Radical r, const BigRational& scale) {
  QuadExt out;
  out.re_[r] = scale;
  out.re_[r].canonicalize();
  return out;
}

QuadExt QuadExt::imaginary_unit() {
  QuadExt out;
  out.im_[0] = 1;
  return out;
}

bool QuadExt::is_zero() const { return is_zero_real(re_) && is_zero_real(im_); }

bool QuadExt::is_real() const { return is_zero_real(im_); }

bool QuadExt::is_rational() const {
  return is_real() && sgn(re_[1]) == 0 && sgn(re_[2]) == 0 && sgn(re_[3]) == 0;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  for (int i = 0; i < 4; ++i) {
    re_[i] += o.re_[i];
    im_[i] += o.im_[i];
  }
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  for (int i = 0; i < 4; ++i) {
    re_[i] -= o.re_[i];
    im_[i] -= o.im_[i];
  }
  return *this;
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  QuadExt out;
  out.re_ = sub_real(mul_real(a.re_, b.re_), mul_real(a.im_, b.im_));
  out.im_ = add_real(mul_real(a.re_, b.im_), mul_real(a.im_, b.re_));
  return out;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) { return *this = *this * o; }

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  return *this = *this * ef_inv(o);
}

QuadExt QuadExt::operator-() const {
  QuadExt out = *this;
  for (int i = 0; i < 4; ++i) {
    out.re_[i] = -out.re_[i];
    out.im_[i] = -out.im_[i];
  }
  return out;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  return a.re_ == b.re_ && a.im_ == b.im_;
}

QuadExt ef_add(const QuadExt& a, const QuadExt& b) { return a + b; }

QuadExt ef_mul(const QuadExt& a, const QuadExt& b) { return a * b; }

QuadExt ef_conj(const QuadExt& a) {
  std::array<BigRational, 4> im = a.im_coords();
  for (auto& c : im) c = -c;
  return QuadExt::from_coords(a.re_coords(), im);
}

QuadExt ef_inv(const QuadExt& a) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "ef_inv: zero has no inverse");
  QuadExt conj = ef_conj(a);
  QuadExt norm = a * conj;  // real, positive
  QuadExt inv_norm = QuadExt::from_coords(inv_real(norm.re_coords()), Coords{});
  return conj * inv_norm;
}

QuadExt ef_from_sqrt_int(std::uint64_t n, const BigRational& scale) {
  if (n == 0) return QuadExt{};
  std::uint64_t square_root = 1;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square_root *= p;
    }
  }
  QuadExt::Radical r;
  switch (rest) {
    case 1: r = QuadExt::kOne; break;
    case 2: r = QuadExt::kSqrt2; break;
    case 3: r = QuadExt::kSqrt3; break;
    case 6: r = QuadExt::kSqrt6; break;
    default:
      throw Error(ErrorKind::UnrepresentableRadical,
                  "sqrt(" + std::to_string(n) + ") is not in Q(sqrt2, sqrt3)");
  }
  BigRational coeff = scale * mpz_class(std::to_string(square_root));
  return QuadExt::radical(r, coeff);
}

Complex ef_to_complex(const QuadExt& a) {
  return {evaluate_coords(a.re_coords()), evaluate_coords(a.im_coords())};
}

QuadExt ef_sqrt_real(const QuadExt& a) {
  if (!a.is_real())
    throw Error(ErrorKind::UnrepresentableRadical, "ef_sqrt_real: argument is not real");
  if (a.is_zero()) return QuadExt{};
  if (ef_to_complex(a).real() < 0)
    throw Error(ErrorKind::UnrepresentableRadical, "ef_sqrt_real: negative argument");
  auto root = sqrt_q23(a.re_coords());
  if (!root)
    throw Error(ErrorKind::UnrepresentableRadical,
                "sqrt(" + to_string(a) + ") is not in Q(sqrt2, sqrt3)");
  QuadExt out = QuadExt::from_coords(*root, Coords{});
  if (ef_to_complex(out).real() < 0) out = -out;
  return out;
}

QuadExt ef_abs(const QuadExt& a) { return ef_sqrt_real(a * ef_conj(a)); }

std::string to_string(const QuadExt& a) {
  std::vector<std::string> terms;
  for (int i = 0; i < 4; ++i) {
    const BigRational& c = a.re(i);
    if (sgn(c) == 0) continue;
    if (i == 0)
      terms.push_back(c.get_str());
    else
      terms.push_back("(" + c.get_str() + ")*" + kRadicalNames[i]);
  }
  for (int i = 0; i < 4; ++i) {
    const BigRational& c = a.im(i);
    if (sgn(c) == 0) continue;
    std::string term = "i*(" + c.get_str() + ")";
    if (i != 0) term += std::string("*") + kRadicalNames[i];
    terms.push_back(std::move(term));
  }
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) out += " + " + terms[k];
  return out;
}

namespace {

BigRational parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty())
    throw Error(ErrorKind::Parse, "empty coefficient in '" + std::string(whole) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw Error(ErrorKind::Parse, "bad rational '" + s + "' in '" + std::string(whole) + "'");
  BigRational q;
  if (q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0)
    throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

QuadExt parse_quadext(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty()) throw Error(ErrorKind::Parse, "empty QuadExt literal");

  std::vector<std::string> terms;
  int depth = 0;
  std::string current;
  for (char ch : compact) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0 && !current.empty()) {
      terms.push_back(current);
      current.clear();
      continue;
    }
    current += ch;
  }
  if (depth != 0 || current.empty())
    throw Error(ErrorKind::Parse, "unbalanced QuadExt literal '" + std::string(text) + "'");
  terms.push_back(current);

  std::array<BigRational, 4> re{};
  std::array<BigRational, 4> im{};
  for (std::string_view term : terms) {
    bool imaginary = false;
    BigRational sign = 1;
    if (term.starts_with("-i")) {
      sign = -1;
      term.remove_prefix(1);
    }
    if (term == "i") {
      im[0] += sign;
      continue;
    }
    if (term.starts_with("i*")) {
      imaginary = true;
      term.remove_prefix(2);
    }
    int radical = 0;
    for (int r = 1; r < 4; ++r) {
      std::string_view name = kRadicalNames[r];
      if (term.ends_with(name)) {
        radical = r;
        term.remove_suffix(name.size());
        if (term.ends_with("*")) term.remove_suffix(1);
        break;
      }
    }
    BigRational coeff = 1;
    if (!term.empty() && term != "-") {
      if (term.front() == '(' && term.back() == ')') {
        term.remove_prefix(1);
        term.remove_suffix(1);
      }
      coeff = parse_rational(term, text);
    } else if (term == "-") {
      coeff = -1;
    } else if (radical == 0) {
      throw Error(ErrorKind::Parse, "empty term in '" + std::string(text) + "'");
    }
    (imaginary ? im : re)[radical] += sign * coeff;
  }
  return QuadExt::from_coords(re, im);
}

}  // namespace spinlab

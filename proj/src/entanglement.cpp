#include "spinlab/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "spinlab/spectral.hpp"

namespace spinlab {

void Bipartition::validate() const {
  if (left.empty() || left.size() >= dims.size())
    throw Error(ErrorKind::DimensionMismatch, "cut must leave both sides nonempty");
  std::vector<bool> seen(dims.size(), false);
  for (auto f : left) {
    if (f >= dims.size() || seen[f])
      throw Error(ErrorKind::DimensionMismatch, "cut index out of range or repeated");
    seen[f] = true;
  }
}

std::vector<std::size_t> Bipartition::right() const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < dims.size(); ++f)
    if (std::find(left.begin(), left.end(), f) == left.end()) out.push_back(f);
  return out;
}

std::size_t Bipartition::left_dimension() const {
  std::size_t d = 1;
  for (auto f : left) d *= dims[f];
  return d;
}

std::size_t Bipartition::right_dimension() const {
  std::size_t d = 1;
  for (auto f : right()) d *= dims[f];
  return d;
}

FactorPermutation Bipartition::reordering() const {
  validate();
  std::vector<std::size_t> sorted_left = left;
  std::sort(sorted_left.begin(), sorted_left.end());
  FactorPermutation fp{dims, sorted_left};
  for (auto f : right()) fp.order.push_back(f);
  return fp;
}

CoefficientMatrix reshape_for_cut(std::span<const Complex> v, const Bipartition& cut) {
  ComplexVector sorted = permute_factors(v, cut.reordering());
  CoefficientMatrix m{cut.left_dimension(), cut.right_dimension(), std::move(sorted)};
  return m;
}

SchmidtResult schmidt(std::span<const Complex> v, const Bipartition& cut, double rank_tol) {
  if (norm(v) == 0.0) throw Error(ErrorKind::ZeroVector, "schmidt: zero vector");
  const CoefficientMatrix m = reshape_for_cut(v, cut);
  const bool left_gram = m.rows <= m.cols;
  const std::size_t k = left_gram ? m.rows : m.cols;

  NumericMatrix gram(k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      Complex s{};
      if (left_gram)
        for (std::size_t b = 0; b < m.cols; ++b) s += m(x, b) * std::conj(m(y, b));
      else
        for (std::size_t a = 0; a < m.rows; ++a) s += std::conj(m(a, x)) * m(a, y);
      gram(x, y) = s;
    }
  const EigenDecomposition eig = hermitian_eigen(gram);

  SchmidtResult out;
  out.cut = cut;
  // sigma_i = |M^dagger u_i| (or |M w_i|) rather than sqrt(lambda_i): the
  // square root turns a roundoff-level Gram eigenvalue ~1e-17 into ~1e-9.
  std::vector<std::pair<double, std::size_t>> sigmas;
  for (std::size_t idx = 0; idx < k; ++idx) {
    const ComplexVector g = eig.column(idx);
    double s = 0.0;
    if (left_gram) {
      for (std::size_t b = 0; b < m.cols; ++b) {
        Complex acc{};
        for (std::size_t a = 0; a < m.rows; ++a) acc += std::conj(g[a]) * m(a, b);
        s += std::norm(acc);
      }
    } else {
      for (std::size_t a = 0; a < m.rows; ++a) {
        Complex acc{};
        for (std::size_t b = 0; b < m.cols; ++b) acc += m(a, b) * g[b];
        s += std::norm(acc);
      }
    }
    sigmas.emplace_back(std::sqrt(s), idx);
  }
  std::stable_sort(sigmas.begin(), sigmas.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });

  for (const auto& [sigma, idx] : sigmas) {
    out.coefficients.push_back(sigma);
    if (sigma <= rank_tol) continue;
    const ComplexVector g = eig.column(idx);
    ComplexVector l;
    ComplexVector r;
    if (left_gram) {
      l = g;
      r.assign(m.cols, Complex{});
      for (std::size_t b = 0; b < m.cols; ++b) {
        for (std::size_t a = 0; a < m.rows; ++a) r[b] += std::conj(g[a]) * m(a, b);
        r[b] /= sigma;
      }
    } else {
      l.assign(m.rows, Complex{});
      for (std::size_t a = 0; a < m.rows; ++a) {
        for (std::size_t b = 0; b < m.cols; ++b) l[a] += m(a, b) * g[b];
        l[a] /= sigma;
      }
      r.resize(m.cols);
      for (std::size_t b = 0; b < m.cols; ++b) r[b] = std::conj(g[b]);
    }
    out.left_vectors.push_back(std::move(l));
    out.right_vectors.push_back(std::move(r));
    ++out.rank;
  }
  return out;
}

ComplexVector reconstruct(const SchmidtResult& r) {
  const FactorPermutation forward = r.cut.reordering();
  ComplexVector sorted(forward.dimension(), Complex{});
  for (std::size_t i = 0; i < r.rank; ++i) {
    const ComplexVector term = kron(r.left_vectors[i], r.right_vectors[i]);
    for (std::size_t k = 0; k < sorted.size(); ++k) sorted[k] += r.coefficients[i] * term[k];
  }
  FactorPermutation backward{forward.permuted_dims(), std::vector<std::size_t>(forward.order.size())};
  for (std::size_t t = 0; t < forward.order.size(); ++t) backward.order[forward.order[t]] = t;
  return permute_factors(sorted, backward);
}

double entanglement_entropy(const SchmidtResult& r) {
  double total = 0.0;
  for (double c : r.coefficients) total += c * c;
  if (std::abs(total - 1.0) > 1e-10)
    throw Error(ErrorKind::NotNormalized,
                "entanglement_entropy: sum of squared coefficients is " + std::to_string(total));
  double s = 0.0;
  for (double c : r.coefficients) {
    const double p = c * c;
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

std::vector<QuadExt> reference_eigenvector_exact(SqrtThreeBranch branch) {
  const long s = branch == SqrtThreeBranch::Plus ? 1 : -1;
  const QuadExt i = QuadExt::imaginary_unit();
  const QuadExt sqrt3 = QuadExt::radical(QuadExt::kSqrt3, s);  // s*sqrt3
  const QuadExt a = QuadExt(2) - sqrt3;                        // 2 -/+ sqrt3
  const QuadExt one_plus_i = QuadExt(1) + i;

  std::vector<QuadExt> v(45);
  v[3] = 1;
  v[5] = a * i;
  v[9] = -a * i;
  v[11] = -1;
  v[16] = (sqrt3 - QuadExt(1)) * one_plus_i;
  v[28] = (QuadExt(1) - sqrt3) * one_plus_i;
  v[33] = a * i;
  v[35] = 1;
  v[39] = -1;
  v[41] = -a * i;

  // Normalizer sqrt(24 (2 -/+ sqrt3)) lies in the field: 6 -/+ 2 sqrt3.
  const QuadExt normalizer = ef_sqrt_real(QuadExt(24) * a);
  const QuadExt inv = ef_inv(normalizer);
  for (auto& x : v) x *= inv;
  return v;
}

ComplexVector reference_eigenvector(SqrtThreeBranch branch) {
  const auto exact = reference_eigenvector_exact(branch);
  ComplexVector out;
  out.reserve(exact.size());
  for (const auto& x : exact) out.push_back(ef_to_complex(x));
  return out;
}

std::vector<Bipartition> tripartite_cuts(const std::vector<std::size_t>& dims) {
  if (dims.size() != 3)
    throw Error(ErrorKind::DimensionMismatch, "tripartite_cuts needs exactly three factors");
  return {{dims, {0, 2}}, {dims, {0}}, {dims, {0, 1}}};
}

bool ReferenceCheck::ok() const {
  return matches && std::all_of(cuts.begin(), cuts.end(), [](const CutCheck& c) { return c.ok; });
}

std::string ReferenceCheck::summary() const {
  std::ostringstream os;
  if (matches)
    os << "eigenvector matches reference (max deviation " << max_deviation << ")";
  else
    os << "eigenvector mismatch at component " << first_mismatch.value_or(0)
       << " (max deviation " << max_deviation << ")";
  for (const auto& c : cuts) {
    os << "; cut {";
    for (std::size_t k = 0; k < c.cut.left.size(); ++k) os << (k ? "," : "") << c.cut.left[k] + 1;
    os << "}: rank " << c.schmidt.rank << (c.ok ? " ok" : " FAIL");
  }
  return os.str();
}

ReferenceCheck verify_schmidt_against_reference(std::span<const Complex> eigvec,
                                                SqrtThreeBranch branch, double tol) {
  const ComplexVector ref = reference_eigenvector(branch);
  if (eigvec.size() != ref.size())
    throw Error(ErrorKind::DimensionMismatch, "reference comparison needs a 45-component vector");

  ReferenceCheck out;
  const Complex overlap = inner(ref, eigvec);
  out.phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  for (std::size_t k = 0; k < ref.size(); ++k) {
    const double dev = std::abs(eigvec[k] - out.phase * ref[k]);
    if (dev > tol && !out.first_mismatch) out.first_mismatch = k;
    out.max_deviation = std::max(out.max_deviation, dev);
  }
  out.matches = !out.first_mismatch.has_value();

  const double target = 1.0 / std::sqrt(3.0);
  for (const auto& cut : tripartite_cuts({3, 5, 3})) {
    CutCheck check;
    check.cut = cut;
    check.schmidt = schmidt(eigvec, cut);
    check.entropy = entanglement_entropy(check.schmidt);
    for (std::size_t k = 0; k < 3 && k < check.schmidt.coefficients.size(); ++k)
      check.max_coefficient_error =
          std::max(check.max_coefficient_error, std::abs(check.schmidt.coefficients[k] - target));
    const ComplexVector back = reconstruct(check.schmidt);
    for (std::size_t k = 0; k < back.size(); ++k)
      check.reconstruction_error = std::max(check.reconstruction_error, std::abs(back[k] - eigvec[k]));
    check.ok = check.schmidt.rank == 3 && check.max_coefficient_error <= tol &&
               std::abs(check.entropy - std::log(3.0)) <= tol &&
               check.reconstruction_error <= 1e-12;
    out.cuts.push_back(std::move(check));
  }
  return out;
}

}  // namespace spinlab

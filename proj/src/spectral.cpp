#include "spinlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spinlab {

ComplexVector EigenDecomposition::column(std::size_t k) const {
  ComplexVector v(vectors.size());
  for (std::size_t r = 0; r < v.size(); ++r) v[r] = vectors(r, k);
  return v;
}

namespace {

double off_diagonal_norm(const NumericMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// 2x2 unitary acting on coordinates (p, q).
struct PlaneRotation {
  Complex pp, pq, qp, qq;
};

// Unitary J with (J^dagger A J)_{pq} = 0: a phase that makes a_pq real and
// positive, followed by the real symmetric Jacobi rotation.
PlaneRotation jacobi_rotation(double app, double aqq, Complex apq) {
  const double mag = std::abs(apq);
  const Complex phase = std::conj(apq) / mag;
  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150)
    t = 0.5 / theta;
  else
    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  return {c, s, -s * phase, c * phase};
}

void apply_columns(NumericMatrix& m, std::size_t p, std::size_t q, const PlaneRotation& j) {
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Complex mkp = m(k, p);
    const Complex mkq = m(k, q);
    m(k, p) = mkp * j.pp + mkq * j.qp;
    m(k, q) = mkp * j.pq + mkq * j.qq;
  }
}

void apply_rows_adjoint(NumericMatrix& m, std::size_t p, std::size_t q, const PlaneRotation& j) {
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Complex mpk = m(p, k);
    const Complex mqk = m(q, k);
    m(p, k) = std::conj(j.pp) * mpk + std::conj(j.qp) * mqk;
    m(q, k) = std::conj(j.pq) * mpk + std::conj(j.qq) * mqk;
  }
}

}  // namespace

EigenDecomposition hermitian_eigen(const NumericMatrix& input, const JacobiOptions& options) {
  const std::size_t n = input.size();
  if (const double defect = hermiticity_defect(input); defect > options.hermitian_tol)
    throw Error(ErrorKind::NotHermitian,
                "hermitian_eigen: |A - A^dagger| = " + std::to_string(defect));

  NumericMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (input(r, c) + std::conj(input(c, r)));
  NumericMatrix v = NumericMatrix::identity(n);

  const double scale = frobenius_norm(a);
  int sweep = 0;
  for (;; ++sweep) {
    if (off_diagonal_norm(a) <= options.relative_off_tol * scale) break;
    if (sweep >= options.max_sweeps)
      throw Error(ErrorKind::NoConvergence, "hermitian_eigen: no convergence after " +
                                                std::to_string(options.max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        if (apq == Complex{}) continue;
        const auto rot = jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
        apply_columns(a, p, q, rot);
        apply_rows_adjoint(a, p, q, rot);
        apply_columns(v, p, q, rot);
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors = NumericMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexVector col = out.column(k);
    ComplexVector av = multiply(input, col);
    for (std::size_t r = 0; r < n; ++r) av[r] -= out.values[k] * col[r];
    out.residual = std::max(out.residual, norm(av));
  }
  return out;
}

std::vector<EigenCluster> cluster_spectrum(const std::vector<double>& values, double tol) {
  std::vector<EigenCluster> clusters;
  double sum = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k == 0 || values[k] - values[k - 1] > tol) {
      if (!clusters.empty()) clusters.back().value = sum / clusters.back().multiplicity;
      clusters.push_back({0.0, 0, k, {}});
      sum = 0.0;
    }
    clusters.back().multiplicity += 1;
    sum += values[k];
  }
  if (!clusters.empty()) clusters.back().value = sum / clusters.back().multiplicity;
  return clusters;
}

std::vector<EigenCluster> cluster_spectrum(const EigenDecomposition& eig, double tol) {
  auto clusters = cluster_spectrum(eig.values, tol);
  for (auto& cl : clusters)
    for (std::size_t k = 0; k < cl.multiplicity; ++k) cl.basis.push_back(eig.column(cl.first_index + k));
  return clusters;
}

double row_sum_bound(const NumericMatrix& a) {
  double best = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    double s = 0.0;
    for (const auto& x : a.row(r)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

QuadExt row_sum_bound(const ExactMatrix& a) {
  QuadExt best;
  double best_value = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    QuadExt s;
    for (const auto& x : a.row(r))
      if (!x.is_zero()) s += ef_abs(x);
    const double value = ef_to_complex(s).real();
    if (value > best_value) {
      best = s;
      best_value = value;
    }
  }
  return best;
}

double eigen_residual(const NumericMatrix& a, double lambda, std::span<const Complex> v) {
  if (std::abs(norm(v) - 1.0) > 1e-12)
    throw Error(ErrorKind::NotNormalized, "eigen_residual: vector is not unit norm");
  ComplexVector av = multiply(a, v);
  for (std::size_t k = 0; k < av.size(); ++k) av[k] -= lambda * v[k];
  return norm(av);
}

}  // namespace spinlab

#include "spinlab/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace spinlab {

PermutationMatrix::PermutationMatrix(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (auto k : image_) {
    if (k >= image_.size() || seen[k])
      throw Error(ErrorKind::InvalidPermutation, "image array is not a bijection");
    seen[k] = true;
  }
}

PermutationMatrix PermutationMatrix::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), 0);
  return PermutationMatrix(std::move(image));
}

PermutationMatrix PermutationMatrix::from_factor_permutation(const FactorPermutation& fp) {
  return PermutationMatrix(fp.index_map());
}

PermutationMatrix PermutationMatrix::compose(const PermutationMatrix& other) const {
  if (other.size() != size())
    throw Error(ErrorKind::DimensionMismatch, "compose: permutation sizes differ");
  std::vector<std::size_t> image(size());
  for (std::size_t k = 0; k < size(); ++k) image[k] = image_[other.image_[k]];
  return PermutationMatrix(std::move(image));
}

PermutationMatrix PermutationMatrix::inverse() const {
  std::vector<std::size_t> image(size());
  for (std::size_t k = 0; k < size(); ++k) image[image_[k]] = k;
  return PermutationMatrix(std::move(image));
}

std::string PermutationMatrix::one_line() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < size(); ++k) os << (k ? " " : "") << image_[k] + 1;
  os << ']';
  return os.str();
}

PermutationMatrix kron(const PermutationMatrix& a, const PermutationMatrix& b) {
  const std::size_t m = b.size();
  std::vector<std::size_t> image(a.size() * m);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) image[i * m + j] = a.image()[i] * m + b.image()[j];
  return PermutationMatrix(std::move(image));
}

PermutationMatrix not_gate(std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t k = 0; k < n; ++k) image[k] = n - 1 - k;
  return PermutationMatrix(std::move(image));
}

PermutationMatrix parse_factor_product(const std::string& text, const std::vector<std::size_t>& dims) {
  std::istringstream in(text);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  // Expect: op x op x op ...
  if (words.size() != 2 * dims.size() - 1)
    throw Error(ErrorKind::Parse, "permutation spec '" + text + "' must name one of id/not per factor, separated by 'x'");
  PermutationMatrix out = PermutationMatrix::identity(1);
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (f > 0 && words[2 * f - 1] != "x" && words[2 * f - 1] != "X")
      throw Error(ErrorKind::Parse, "expected 'x' between factors in '" + text + "'");
    std::string op = words[2 * f];
    std::transform(op.begin(), op.end(), op.begin(), [](unsigned char c) { return std::tolower(c); });
    PermutationMatrix local;
    if (op == "id" || op == "i")
      local = PermutationMatrix::identity(dims[f]);
    else if (op == "not")
      local = not_gate(dims[f]);
    else
      throw Error(ErrorKind::Parse, "unknown factor permutation '" + op + "'");
    out = kron(out, local);
  }
  return out;
}

namespace {

template <typename T>
double entry_deviation(const T& a, const T& b);

template <>
double entry_deviation(const QuadExt& a, const QuadExt& b) {
  return a == b ? 0.0 : std::abs(ef_to_complex(a - b));
}

template <>
double entry_deviation(const Complex& a, const Complex& b) {
  return std::abs(a - b);
}

template <typename T>
double max_deviation(const Matrix<T>& a, const Matrix<T>& b) {
  double dev = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) dev = std::max(dev, entry_deviation(a(r, c), b(r, c)));
  return dev;
}

template <typename T>
double permuted_deviation(const PermutationMatrix& p, const Matrix<T>& k) {
  if (p.size() != k.size())
    throw Error(ErrorKind::DimensionMismatch, "is_symmetry: permutation and Hamiltonian sizes differ");
  const auto& im = p.image();
  double dev = 0.0;
  for (std::size_t r = 0; r < k.size(); ++r)
    for (std::size_t c = 0; c < k.size(); ++c) dev = std::max(dev, entry_deviation(k(im[r], im[c]), k(r, c)));
  return dev;
}

}  // namespace

SymmetryCheck is_symmetry(const ExactMatrix& m, const ExactMatrix& k) {
  m.require_same(k, "is_symmetry");
  const ExactMatrix conjugated = m.adjoint() * k * m;
  const bool holds = conjugated == k;
  return {holds, holds ? 0.0 : max_deviation(conjugated, k)};
}

SymmetryCheck is_symmetry(const NumericMatrix& m, const NumericMatrix& k, double tol) {
  m.require_same(k, "is_symmetry");
  const double dev = max_deviation(NumericMatrix(m.adjoint() * k * m), k);
  return {dev <= tol, dev};
}

SymmetryCheck is_symmetry(const PermutationMatrix& p, const ExactMatrix& k) {
  const double dev = permuted_deviation(p, k);
  return {dev == 0.0, dev};
}

SymmetryCheck is_symmetry(const PermutationMatrix& p, const NumericMatrix& k, double tol) {
  const double dev = permuted_deviation(p, k);
  return {dev <= tol, dev};
}

std::vector<std::vector<PermutationMatrix>> default_factor_generators(const HamiltonianSpec& spec) {
  std::vector<std::vector<PermutationMatrix>> gens;
  for (auto d : spec.dims()) {
    std::vector<PermutationMatrix> g{PermutationMatrix::identity(d)};
    if (d > 1) g.push_back(not_gate(d));
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<PermutationMatrix> search_factor_symmetries(
    const HamiltonianSpec& spec, const std::vector<std::vector<PermutationMatrix>>& generators,
    bool include_factor_swaps) {
  const auto dims = spec.dims();
  if (generators.size() != dims.size())
    throw Error(ErrorKind::DimensionMismatch, "one generator list per factor required");
  for (std::size_t f = 0; f < dims.size(); ++f)
    for (const auto& g : generators[f])
      if (g.size() != dims[f])
        throw Error(ErrorKind::DimensionMismatch, "generator size differs from factor dimension");

  const ExactMatrix k = build_hamiltonian<QuadExt>(spec);

  std::vector<PermutationMatrix> reorderings;
  std::vector<std::size_t> order(dims.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    bool same_dims = true;
    for (std::size_t t = 0; t < dims.size(); ++t) same_dims = same_dims && dims[order[t]] == dims[t];
    if (same_dims)
      reorderings.push_back(PermutationMatrix::from_factor_permutation({dims, order}));
  } while (include_factor_swaps && std::next_permutation(order.begin(), order.end()));

  std::vector<PermutationMatrix> found;
  std::vector<std::size_t> choice(dims.size(), 0);
  for (;;) {
    PermutationMatrix local = PermutationMatrix::identity(1);
    for (std::size_t f = 0; f < dims.size(); ++f) local = kron(local, generators[f][choice[f]]);
    for (const auto& reorder : reorderings) {
      PermutationMatrix candidate = reorder.compose(local);
      if (is_symmetry(candidate, k).holds) found.push_back(std::move(candidate));
    }
    std::size_t f = 0;
    while (f < dims.size() && ++choice[f] == generators[f].size()) choice[f++] = 0;
    if (f == dims.size()) break;
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<std::size_t> commutant_block_order(const std::vector<EigenCluster>& clusters,
                                               double zero_tol) {
  std::vector<std::size_t> nonzero;
  std::vector<std::size_t> kernel;
  for (std::size_t j = 0; j < clusters.size(); ++j)
    (std::abs(clusters[j].value) <= zero_tol ? kernel : nonzero).push_back(j);
  std::stable_sort(nonzero.begin(), nonzero.end(), [&](std::size_t a, std::size_t b) {
    if (clusters[a].multiplicity != clusters[b].multiplicity)
      return clusters[a].multiplicity > clusters[b].multiplicity;
    return clusters[a].value < clusters[b].value;
  });
  nonzero.insert(nonzero.end(), kernel.begin(), kernel.end());
  return nonzero;
}

NumericMatrix commutant_symmetry(const std::vector<EigenCluster>& clusters, const CommutantSpec& spec) {
  const auto order = commutant_block_order(clusters);
  if (spec.blocks.size() != order.size())
    throw Error(ErrorKind::BlockSizeMismatch, "need one block per eigenvalue cluster");
  std::size_t n = 0;
  for (const auto& c : clusters) n += c.multiplicity;

  NumericMatrix s(n);
  for (std::size_t j = 0; j < order.size(); ++j) {
    const EigenCluster& cl = clusters[order[j]];
    const NumericMatrix& v = spec.blocks[j];
    if (v.size() != cl.multiplicity || cl.basis.size() != cl.multiplicity)
      throw Error(ErrorKind::BlockSizeMismatch,
                  "block " + std::to_string(j) + " has size " + std::to_string(v.size()) +
                      ", cluster multiplicity is " + std::to_string(cl.multiplicity));
    // B V B^dagger with B the cluster basis (n x m).
    const std::size_t m = cl.multiplicity;
    std::vector<ComplexVector> bv(m, ComplexVector(n));
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t r = 0; r < n; ++r) {
        Complex acc{};
        for (std::size_t k = 0; k < m; ++k) acc += cl.basis[k][r] * v(k, c);
        bv[c][r] = acc;
      }
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Complex acc{};
        for (std::size_t k = 0; k < m; ++k) acc += bv[k][r] * std::conj(cl.basis[k][c]);
        s(r, c) += acc;
      }
  }
  return s;
}

std::size_t commutant_dimension(const std::vector<EigenCluster>& clusters) {
  std::size_t d = 0;
  for (const auto& c : clusters) d += c.multiplicity * c.multiplicity;
  return d;
}

NumericMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::vector<ComplexVector> cols(n, ComplexVector(n));
  for (auto& col : cols)
    for (auto& x : col) x = {gauss(rng), gauss(rng)};
  // Modified Gram-Schmidt, twice for orthogonality at machine precision.
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t p = 0; p < c; ++p) {
        const Complex proj = inner(cols[p], cols[c]);
        for (std::size_t r = 0; r < n; ++r) cols[c][r] -= proj * cols[p][r];
      }
      const double nrm = norm(cols[c]);
      for (auto& x : cols[c]) x /= nrm;
    }
  NumericMatrix u(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) u(r, c) = cols[c][r];
  return u;
}

double eigenspace_leakage(const NumericMatrix& m, const std::vector<EigenCluster>& clusters) {
  const std::size_t n = m.size();
  double worst = 0.0;
  for (const auto& cl : clusters) {
    NumericMatrix proj(n);
    for (const auto& b : cl.basis)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) proj(r, c) += b[r] * std::conj(b[c]);
    const NumericMatrix leak = (NumericMatrix::identity(n) - proj) * m * proj;
    worst = std::max(worst, max_abs(leak));
  }
  return worst;
}

}  // namespace spinlab

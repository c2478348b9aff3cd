#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "reference_data.hpp"
#include "spinlab/entanglement.hpp"
#include "spinlab/spectral.hpp"
#include "spinlab/symmetry.hpp"

using namespace spinlab;
using oracle::I;
using oracle::q;

namespace {

using refdata::ExactVector;
using refdata::inner_exact;
using refdata::known_decompositions;
using refdata::kron_exact;
using refdata::norm2;
using refdata::unit;

ComplexVector to_complex(const ExactVector& v) {
  ComplexVector out;
  for (const auto& x : v) out.push_back(ef_to_complex(x));
  return out;
}

ComplexVector computed_eigenvector(double lambda) {
  const auto eig = hermitian_eigen(build_hamiltonian<Complex>(photon_graviton_spec()));
  for (const auto& c : cluster_spectrum(eig))
    if (std::abs(c.value - lambda) < 1e-9) {
      REQUIRE(c.multiplicity == 1);
      return c.basis.front();
    }
  FAIL("eigenvalue not found");
  return {};
}

double max_diff(const ComplexVector& a, const ComplexVector& b) {
  double out = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) out = std::max(out, std::abs(a[k] - b[k]));
  return out;
}

ComplexVector random_unit(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(n);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  const double s = norm(v);
  for (auto& x : v) x /= s;
  return v;
}

}  // namespace

TEST_SUITE("entanglement") {

TEST_CASE("closed-form decompositions reproduce the reference eigenvectors exactly") {
  for (auto branch : {SqrtThreeBranch::Plus, SqrtThreeBranch::Minus}) {
    const auto w = reference_eigenvector_exact(branch);
    CHECK(norm2(w) == QuadExt(1));
    const QuadExt t = QuadExt::radical(QuadExt::kSqrt3, branch == SqrtThreeBranch::Plus ? 1 : -1);
    const QuadExt normalizer_sq = QuadExt(24) * (QuadExt(2) - t);
    const QuadExt normalizer = ef_sqrt_real(normalizer_sq);
    const auto cuts = tripartite_cuts({3, 5, 3});
    const auto decompositions = known_decompositions(branch);
    for (std::size_t c = 0; c < 3; ++c) {
      CAPTURE(c);
      const auto sorted = reshape_for_cut(to_complex(w), cuts[c]);
      ExactVector sum(45);
      for (const auto& term : decompositions[c]) {
        const auto piece = kron_exact(term.left, term.right);
        for (std::size_t k = 0; k < 45; ++k) sum[k] += term.scale * piece[k];
        // Each term carries exactly a third of the squared norm: coefficient 1/sqrt3.
        const QuadExt share = term.scale * ef_conj(term.scale) * norm2(term.left) * norm2(term.right);
        CHECK(share / normalizer_sq == q(1, 3));
      }
      for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = x + 1; y < 3; ++y) {
          CHECK(inner_exact(decompositions[c][x].left, decompositions[c][y].left).is_zero());
          CHECK(inner_exact(decompositions[c][x].right, decompositions[c][y].right).is_zero());
        }
      const auto expected = to_complex(sum);
      double err = 0.0;
      for (std::size_t k = 0; k < 45; ++k)
        err = std::max(err, std::abs(expected[k] - ef_to_complex(normalizer) * sorted.data[k]));
      CHECK(err <= 1e-14);
    }
  }
}

TEST_CASE("pair-graviton cut is the P_GB reordering") {
  std::mt19937_64 rng(8);
  const auto v = random_unit(45, rng);
  const auto m = reshape_for_cut(v, Bipartition{{3, 5, 3}, {0, 2}});
  CHECK(m.rows == 9);
  CHECK(m.cols == 5);
  // Photon-graviton-photon to photon-photon-graviton is the inverse of P_GB.
  const auto p_gb = factor_permutation_matrix<Complex>(FactorPermutation{{3, 3, 5}, {0, 2, 1}});
  const auto back = multiply(p_gb, m.data);
  CHECK(max_diff(back, v) == 0.0);

  const auto tail = reshape_for_cut(v, Bipartition{{3, 5, 3}, {0, 1}});
  CHECK(tail.rows == 15);
  CHECK(tail.cols == 3);
  CHECK(max_diff(tail.data, v) == 0.0);

  const ComplexVector e11{1.0, 0.0, 0.0, 0.0};
  const auto single = reshape_for_cut(e11, Bipartition{{2, 2}, {0}});
  CHECK(single(0, 0) == Complex(1.0));
  CHECK(single(1, 1) == Complex(0.0));
}

TEST_CASE("computed non-degenerate eigenvectors") {
  const double target = 1.0 / std::sqrt(3.0);
  for (auto [lambda, branch] : {std::pair{std::sqrt(3.0), SqrtThreeBranch::Plus},
                                std::pair{-std::sqrt(3.0), SqrtThreeBranch::Minus}}) {
    CAPTURE(lambda);
    const auto w = computed_eigenvector(lambda);
    const auto check = verify_schmidt_against_reference(w, branch);
    CHECK(check.matches);
    CHECK(check.max_deviation <= 1e-10);
    CHECK(check.ok());
    REQUIRE(check.cuts.size() == 3);
    for (const auto& cut : check.cuts) {
      CHECK(cut.schmidt.rank == 3);
      for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(cut.schmidt.coefficients[k] - target) <= 1e-10);
      CHECK(std::abs(cut.entropy - std::log(3.0)) <= 1e-10);
      CHECK(cut.reconstruction_error <= 1e-12);
    }
    CHECK(check.summary().find("matches reference") != std::string::npos);
  }
}

TEST_CASE("wrong branch is reported as a mismatch") {
  const auto w = computed_eigenvector(std::sqrt(3.0));
  const auto check = verify_schmidt_against_reference(w, SqrtThreeBranch::Minus);
  CHECK_FALSE(check.matches);
  CHECK_FALSE(check.ok());
  REQUIRE(check.first_mismatch.has_value());
  CHECK(check.summary().find("mismatch at component") != std::string::npos);
}

TEST_CASE("product states") {
  std::mt19937_64 rng(21);
  const auto u = random_unit(3, rng);
  const auto v = random_unit(5, rng);
  const auto w = random_unit(3, rng);
  const auto state = kron(kron(u, v), w);
  for (const auto& cut : tripartite_cuts({3, 5, 3})) {
    const auto r = schmidt(state, cut);
    CHECK(r.rank == 1);
    CHECK(r.coefficients.front() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entanglement_entropy(r) <= 1e-12);
    CHECK(max_diff(reconstruct(r), state) <= 1e-12);
  }
}

TEST_CASE("entropy examples") {
  SchmidtResult r;
  r.coefficients = {1.0};
  CHECK(entanglement_entropy(r) == 0.0);
  r.coefficients = {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
  CHECK(entanglement_entropy(r) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  r.coefficients = {1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 0.0};
  CHECK(entanglement_entropy(r) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  r.coefficients = {0.5, 0.5};
  CHECK_THROWS_AS(entanglement_entropy(r), Error);
}

TEST_CASE("random states: norm, orthonormality, reconstruction, rank bounds") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = random_unit(45, rng);
    for (const auto& cut : tripartite_cuts({3, 5, 3})) {
      const auto r = schmidt(v, cut);
      double total = 0.0;
      for (double c : r.coefficients) total += c * c;
      CHECK(std::abs(total - 1.0) <= 1e-12);
      CHECK(std::is_sorted(r.coefficients.rbegin(), r.coefficients.rend()));
      CHECK(r.rank <= std::min(cut.left_dimension(), cut.right_dimension()));
      CHECK(max_diff(reconstruct(r), v) <= 1e-12);
      for (std::size_t x = 0; x < r.rank; ++x)
        for (std::size_t y = 0; y < r.rank; ++y) {
          const double expect = x == y ? 1.0 : 0.0;
          CHECK(std::abs(inner(r.left_vectors[x], r.left_vectors[y]) - expect) <= 1e-12);
          CHECK(std::abs(inner(r.right_vectors[x], r.right_vectors[y]) - expect) <= 1e-12);
        }
    }
    CHECK(schmidt(v, Bipartition{{3, 5, 3}, {0}}).rank <= 3);
    CHECK(schmidt(v, Bipartition{{3, 5, 3}, {0, 2}}).rank <= 5);
  }
}

TEST_CASE("local unitary invariance") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 10; ++trial) {
    const Bipartition cut{{3, 5, 3}, {0, 2}};
    const auto v = random_unit(45, rng);
    const auto sorted = reshape_for_cut(v, cut).data;
    const auto local = kron(random_unitary(9, rng), random_unitary(5, rng));
    const auto moved = multiply(local, sorted);
    // moved is already in cut-sorted order, so split it with the trivial cut.
    const auto before = schmidt(v, cut);
    const auto after = schmidt(moved, Bipartition{{9, 5}, {0}});
    for (std::size_t k = 0; k < before.coefficients.size(); ++k)
      CHECK(std::abs(before.coefficients[k] - after.coefficients[k]) <= 1e-10);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(schmidt(ComplexVector(45), Bipartition{{3, 5, 3}, {0}}), Error);
  CHECK_THROWS_AS(schmidt(ComplexVector(45, 1.0), Bipartition{{3, 5, 3}, {}}), Error);
  CHECK_THROWS_AS(schmidt(ComplexVector(45, 1.0), Bipartition{{3, 5, 3}, {0, 1, 2}}), Error);
  CHECK_THROWS_AS(schmidt(ComplexVector(45, 1.0), Bipartition{{3, 5, 3}, {7}}), Error);
}

}  // TEST_SUITE

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinlab/charpoly.hpp"
#include "spinlab/entanglement.hpp"
#include "spinlab/spectral.hpp"
#include "spinlab/symmetry.hpp"
#include "spinlab/tensor_algebra.hpp"

namespace py = pybind11;
using namespace spinlab;

namespace {

py::array_t<Complex> to_array(const NumericMatrix& m) {
  py::array_t<Complex> out({m.size(), m.size()});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) view(r, c) = m(r, c);
  return out;
}

std::vector<EigenCluster> clusters_of(const HamiltonianSpec& spec, double tol) {
  return cluster_spectrum(hermitian_eigen(build_hamiltonian<Complex>(spec)), tol);
}

// Unit eigenvector of a multiplicity-1 cluster within `match` of `value`.
ComplexVector simple_eigenvector(const HamiltonianSpec& spec, double value, double tol, double match) {
  for (const auto& c : clusters_of(spec, tol)) {
    if (std::abs(c.value - value) > match) continue;
    if (c.multiplicity != 1)
      throw Error(ErrorKind::DimensionMismatch,
                  "eigenvalue " + std::to_string(c.value) + " has multiplicity " + std::to_string(c.multiplicity));
    return c.basis.front();
  }
  throw Error(ErrorKind::DimensionMismatch, "no eigenvalue near " + std::to_string(value));
}

py::dict schmidt_dict(const ComplexVector& v, const std::vector<std::size_t>& dims,
                      const std::vector<std::size_t>& left, double rank_tol) {
  const auto r = schmidt(v, Bipartition{dims, left}, rank_tol);
  const auto back = reconstruct(r);
  double err = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) err = std::max(err, std::abs(back[k] - v[k]));
  py::dict d;
  d["coefficients"] = r.coefficients;
  d["rank"] = r.rank;
  d["entropy"] = entanglement_entropy(r);
  d["left_vectors"] = r.left_vectors;
  d["right_vectors"] = r.right_vectors;
  d["reconstruction_error"] = err;
  return d;
}

}  // namespace

PYBIND11_MODULE(_spinlab, m) {
  m.doc() = "Coupled spin Hamiltonians: exact spectra, entanglement and symmetries";

  static py::exception<Error> error(m, "SpinlabError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<HamiltonianSpec>(m, "HamiltonianSpec")
      .def_static("from_json", [](const std::string& text) { return parse_hamiltonian_spec(text); })
      .def_static("load", &load_hamiltonian_spec)
      .def_static("photon_graviton", &photon_graviton_spec)
      .def_static("spin_half_graviton", &spin_half_graviton_spec)
      .def_static("spin_half_photon", &spin_half_photon_spec)
      .def_property_readonly("dims", &HamiltonianSpec::dims)
      .def_property_readonly("dimension", &HamiltonianSpec::dimension)
      .def("to_json", [](const HamiltonianSpec& s) { return to_json(s); })
      .def("__repr__", [](const HamiltonianSpec& s) { return "HamiltonianSpec(" + to_json(s) + ")"; });

  m.def("hamiltonian", [](const HamiltonianSpec& s) { return to_array(build_hamiltonian<Complex>(s)); },
        py::arg("spec"), "Numeric Hamiltonian as a complex ndarray.");
  m.def("hamiltonian_exact", [](const HamiltonianSpec& s) {
        const auto k = build_hamiltonian<QuadExt>(s);
        std::vector<std::vector<std::string>> rows(k.size());
        for (std::size_t r = 0; r < k.size(); ++r)
          for (std::size_t c = 0; c < k.size(); ++c) rows[r].push_back(to_string(k(r, c)));
        return rows;
      }, py::arg("spec"), "Exact entries rendered as strings.");
  m.def("eigenvalues", [](const HamiltonianSpec& s) { return hermitian_eigen(build_hamiltonian<Complex>(s)).values; },
        py::arg("spec"));
  m.def("spectrum", [](const HamiltonianSpec& s, double tol) {
        std::vector<std::pair<double, std::size_t>> out;
        for (const auto& c : clusters_of(s, tol)) out.emplace_back(c.value, c.multiplicity);
        return out;
      }, py::arg("spec"), py::arg("tol") = kDefaultClusterTol, "Ascending (value, multiplicity) clusters.");
  m.def("charpoly", [](const HamiltonianSpec& s) {
        return descending_coefficients(char_poly_exact(build_hamiltonian<QuadExt>(s)));
      }, py::arg("spec"), "Exact det(lambda I - K) coefficients, highest degree first.");
  m.def("charpoly_string", [](const HamiltonianSpec& s) {
        return to_string(char_poly_exact(build_hamiltonian<QuadExt>(s)));
      }, py::arg("spec"));
  m.def("row_sum_bound", [](const HamiltonianSpec& s) {
        const auto b = row_sum_bound(build_hamiltonian<QuadExt>(s));
        return std::pair{to_string(b), ef_to_complex(b).real()};
      }, py::arg("spec"), "Exact row-sum bound as (rendered, float).");
  m.def("simple_eigenvector", &simple_eigenvector, py::arg("spec"), py::arg("value"),
        py::arg("tol") = kDefaultClusterTol, py::arg("match") = 1e-9);
  m.def("reference_eigenvector", [](int sign) {
        return reference_eigenvector(sign >= 0 ? SqrtThreeBranch::Plus : SqrtThreeBranch::Minus);
      }, py::arg("sign"), "Closed-form eigenvector for +sqrt3 (sign >= 0) or -sqrt3.");
  m.def("schmidt", &schmidt_dict, py::arg("vector"), py::arg("dims"), py::arg("left"),
        py::arg("rank_tol") = kDefaultRankTol, "Schmidt decomposition; `left` holds 0-based factor indices.");
  m.def("is_symmetry", [](const HamiltonianSpec& s, const std::string& product) {
        return is_symmetry(parse_factor_product(product, s.dims()), build_hamiltonian<QuadExt>(s)).holds;
      }, py::arg("spec"), py::arg("product"), "Exact check of P^T K P == K for e.g. 'not x id x not'.");
  m.def("commutant_dimension", [](const HamiltonianSpec& s, double tol) {
        return commutant_dimension(clusters_of(s, tol));
      }, py::arg("spec"), py::arg("tol") = kDefaultClusterTol);
}

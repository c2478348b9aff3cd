#include "spinlab/tensor_algebra.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace spinlab {

std::vector<std::size_t> HamiltonianSpec::dims() const {
  std::vector<std::size_t> out;
  out.reserve(factors.size());
  for (const auto& s : factors) out.push_back(s.dimension());
  return out;
}

std::size_t HamiltonianSpec::dimension() const {
  std::size_t n = 1;
  for (const auto& s : factors) n *= s.dimension();
  return n;
}

void HamiltonianSpec::validate() const {
  if (factors.empty()) throw Error(ErrorKind::MalformedSpec, "spec has no factors");
  for (std::size_t t = 0; t < terms.size(); ++t)
    if (terms[t].size() != factors.size())
      throw Error(ErrorKind::MalformedSpec,
                  "term " + std::to_string(t) + " has " + std::to_string(terms[t].size()) +
                      " operators for " + std::to_string(factors.size()) + " factors");
}

HamiltonianSpec HamiltonianSpec::diagonal_coupling(std::vector<Spin> factors) {
  HamiltonianSpec spec;
  for (SpinAxis a : {SpinAxis::X, SpinAxis::Y, SpinAxis::Z})
    spec.terms.emplace_back(factors.size(), TermOperator{a});
  spec.factors = std::move(factors);
  return spec;
}

HamiltonianSpec photon_graviton_spec() {
  return HamiltonianSpec::diagonal_coupling({Spin::integer(1), Spin::integer(2), Spin::integer(1)});
}

HamiltonianSpec spin_half_graviton_spec() {
  return HamiltonianSpec::diagonal_coupling({Spin::half(), Spin::integer(2), Spin::half()});
}

HamiltonianSpec spin_half_photon_spec() {
  return HamiltonianSpec::diagonal_coupling({Spin::half(), Spin::integer(1), Spin::half()});
}

HamiltonianSpec parse_hamiltonian_spec(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("factors") || !doc.contains("terms") ||
      !doc["factors"].is_array() || !doc["terms"].is_array())
    throw Error(ErrorKind::MalformedSpec, "spec needs array fields 'factors' and 'terms'");

  HamiltonianSpec spec;
  for (const auto& f : doc["factors"]) {
    if (f.is_string())
      spec.factors.push_back(parse_spin(f.get<std::string>()));
    else if (f.is_number_integer())
      spec.factors.push_back(Spin::integer(f.get<int>()));
    else
      throw Error(ErrorKind::MalformedSpec, "factor must be a spin string like \"1/2\"");
  }
  for (const auto& term : doc["terms"]) {
    if (!term.is_array()) throw Error(ErrorKind::MalformedSpec, "term must be an array");
    std::vector<TermOperator> ops;
    for (const auto& op : term) {
      if (!op.is_string()) throw Error(ErrorKind::MalformedSpec, "axis must be a string");
      const auto text = op.get<std::string>();
      ops.push_back(text == "id" ? TermOperator::identity() : TermOperator{parse_axis(text)});
    }
    spec.terms.push_back(std::move(ops));
  }
  if (doc.contains("scale_note") && doc["scale_note"].is_string())
    spec.scale_note = doc["scale_note"].get<std::string>();
  spec.validate();
  return spec;
}

HamiltonianSpec load_hamiltonian_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedSpec, "cannot open spec file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_hamiltonian_spec(buffer.str());
}

std::string to_json(const HamiltonianSpec& spec) {
  nlohmann::ordered_json doc;
  doc["factors"] = nlohmann::ordered_json::array();
  for (const auto& f : spec.factors) doc["factors"].push_back(to_string(f));
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& term : spec.terms) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& op : term) row.push_back(op.axis ? to_string(*op.axis) : "id");
    doc["terms"].push_back(row);
  }
  doc["scale_note"] = spec.scale_note;
  return doc.dump();
}

template <typename T>
Matrix<T> build_hamiltonian(const HamiltonianSpec& spec) {
  spec.validate();
  Matrix<T> total(spec.dimension());
  for (const auto& term : spec.terms) {
    Matrix<T> product = Matrix<T>::identity(1);
    for (std::size_t f = 0; f < spec.factors.size(); ++f) {
      const auto& op = term[f];
      product = kron(product, op.axis ? spin_matrix<T>(spec.factors[f], *op.axis)
                                      : Matrix<T>::identity(spec.factors[f].dimension()));
    }
    total += product;
  }
  return total;
}

template Matrix<QuadExt> build_hamiltonian<QuadExt>(const HamiltonianSpec&);
template Matrix<Complex> build_hamiltonian<Complex>(const HamiltonianSpec&);

void FactorPermutation::validate() const {
  if (order.size() != dims.size())
    throw Error(ErrorKind::InvalidPermutation, "permutation length differs from factor count");
  std::vector<bool> seen(order.size(), false);
  for (auto o : order) {
    if (o >= order.size() || seen[o])
      throw Error(ErrorKind::InvalidPermutation, "factor order is not a bijection");
    seen[o] = true;
  }
}

std::size_t FactorPermutation::dimension() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::vector<std::size_t> FactorPermutation::permuted_dims() const {
  std::vector<std::size_t> out;
  for (auto o : order) out.push_back(dims[o]);
  return out;
}

std::vector<std::size_t> FactorPermutation::index_map() const {
  validate();
  const std::size_t k = dims.size();
  const auto new_dims = permuted_dims();
  std::vector<std::size_t> map(dimension());
  std::vector<std::size_t> digits(k);
  for (std::size_t flat = 0; flat < map.size(); ++flat) {
    std::size_t rest = flat;
    for (std::size_t f = k; f-- > 0;) {
      digits[f] = rest % dims[f];
      rest /= dims[f];
    }
    std::size_t image = 0;
    for (std::size_t t = 0; t < k; ++t) image = image * new_dims[t] + digits[order[t]];
    map[flat] = image;
  }
  return map;
}

ComplexVector permute_factors(std::span<const Complex> v, const FactorPermutation& fp) {
  if (v.size() != fp.dimension())
    throw Error(ErrorKind::DimensionMismatch,
                "vector length " + std::to_string(v.size()) + " does not match factor dims");
  const auto map = fp.index_map();
  ComplexVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[map[k]] = v[k];
  return out;
}

}  // namespace spinlab

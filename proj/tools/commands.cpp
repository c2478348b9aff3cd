#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "spinlab/charpoly.hpp"
#include "spinlab/entanglement.hpp"
#include "spinlab/spectral.hpp"
#include "spinlab/symmetry.hpp"
#include "spinlab/tensor_algebra.hpp"

namespace spinlab::cli {

using json = nlohmann::ordered_json;

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  void lap(const std::string& name) {
    const auto now = Clock::now();
    laps_[name] = round12(std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }
  const json& laps() const { return laps_; }

 private:
  Clock::time_point last_ = Clock::now();
  json laps_ = json::object();
};

json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

json vector_json(const ComplexVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(json::array({num(x.real()), num(x.imag())}));
  return out;
}

json spec_json(const HamiltonianSpec& spec) { return json::parse(to_json(spec)); }

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::MalformedSpec:
    case ErrorKind::Parse:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::InvalidPermutation:
      return kMalformedInput;
    case ErrorKind::NoConvergence:
      return kNoConvergence;
    case ErrorKind::UnrepresentableRadical:
      return kUnrepresentable;
    case ErrorKind::NonzeroRemainder:
      return kFactorMismatch;
    default:
      return 1;
  }
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "spinlab: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "spinlab: " << e.what() << "\n";
    return 1;
  }
}

void render_text(const json& node, std::ostream& out, const std::string& indent) {
  for (auto it = node.begin(); it != node.end(); ++it) {
    const json& v = it.value();
    const std::string key = node.is_object() ? it.key() : "-";
    if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_structured())) {
      out << indent << key << ":\n";
      render_text(v, out, indent + "  ");
    } else if (v.is_string()) {
      out << indent << key << ": " << v.get<std::string>() << "\n";
    } else {
      out << indent << key << ": " << v.dump() << "\n";
    }
  }
}

int emit(const CommonOptions& common, json report, const Stopwatch& watch, std::ostream& out) {
  if (common.timings) report["timings_ms"] = watch.laps();
  if (common.format == Format::Text)
    render_text(report, out, "");
  else
    out << report.dump(2) << "\n";
  return kOk;
}

struct NumericAnalysis {
  NumericMatrix matrix;
  EigenDecomposition eig;
  std::vector<EigenCluster> clusters;
};

NumericAnalysis analyze(const HamiltonianSpec& spec, double tol) {
  NumericAnalysis a;
  a.matrix = build_hamiltonian<Complex>(spec);
  a.eig = hermitian_eigen(a.matrix);
  a.clusters = cluster_spectrum(a.eig, tol);
  return a;
}

json clusters_json(const std::vector<EigenCluster>& clusters) {
  json out = json::array();
  for (const auto& c : clusters)
    out.push_back({{"value", num(c.value)}, {"multiplicity", c.multiplicity}});
  return out;
}

ComplexVector phase_fixed(ComplexVector v) {
  std::size_t pivot = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (std::abs(v[k]) > std::abs(v[pivot]) + 1e-12) pivot = k;
  const Complex phase = std::conj(v[pivot]) / std::abs(v[pivot]);
  for (auto& x : v) x *= phase;
  v[pivot] = std::abs(v[pivot]);
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<ExactPolynomial, unsigned>> load_factored_form(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("factored form is not valid JSON: ") + e.what());
  }
  if (!doc.contains("factors") || !doc["factors"].is_array())
    throw Error(ErrorKind::Parse, "factored form needs a 'factors' array");
  std::vector<std::pair<ExactPolynomial, unsigned>> out;
  for (const auto& f : doc["factors"]) {
    if (!f.contains("coefficients") || !f["coefficients"].is_array())
      throw Error(ErrorKind::Parse, "each factor needs 'coefficients' (highest degree first)");
    std::vector<QuadExt> coeffs;
    for (const auto& c : f["coefficients"]) {
      if (c.is_string())
        coeffs.push_back(parse_quadext(c.get<std::string>()));
      else if (c.is_number_integer())
        coeffs.push_back(QuadExt(c.get<long>()));
      else
        throw Error(ErrorKind::Parse, "coefficients must be integers or exact strings");
    }
    const unsigned power = f.value("power", 1u);
    out.emplace_back(ExactPolynomial::from_descending(coeffs), power);
  }
  return out;
}

std::string factored_string(const std::vector<std::pair<ExactPolynomial, unsigned>>& factors) {
  std::string out;
  for (const auto& [f, p] : factors) {
    if (!out.empty()) out += " * ";
    out += "(" + to_string(f) + ")";
    if (p != 1) out += "^" + std::to_string(p);
  }
  return out;
}

// Closed form for a numeric root of one factor: exact for linear factors and
// for lambda^2 - q with rational q, otherwise "root of <factor>".
std::string closed_form(const ExactPolynomial& f, double value) {
  if (f.degree() == 1 && f.has_rational_coefficients()) {
    BigRational root = -f[0].re(0) / f[1].re(0);
    return root.get_str();
  }
  if (f.degree() == 2 && f.has_rational_coefficients() && f[1].is_zero() && f[2] == QuadExt(1)) {
    BigRational q = -f[0].re(0);
    return std::string(value < 0 ? "-" : "") + "sqrt(" + q.get_str() + ")";
  }
  return "root of " + to_string(f);
}

}  // namespace

double parse_eigenvalue_label(const std::string& label) {
  std::string s = label;
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  if (s.empty()) throw Error(ErrorKind::Parse, "empty eigenvalue label");
  double sign = 1.0;
  if (s.front() == '-' || s.front() == '+') {
    if (s.front() == '-') sign = -1.0;
    s.erase(0, 1);
  }
  auto parse_number = [&](const std::string& t) {
    if (t.empty()) throw Error(ErrorKind::Parse, "bad eigenvalue label '" + label + "'");
    if (auto slash = t.find('/'); slash != std::string::npos)
      return std::stod(t.substr(0, slash)) / std::stod(t.substr(slash + 1));
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw Error(ErrorKind::Parse, "bad eigenvalue label '" + label + "'");
    return v;
  };
  try {
    const auto pos = s.find("sqrt");
    if (pos == std::string::npos) return sign * parse_number(s);
    double coeff = 1.0;
    if (pos > 0) {
      std::string c = s.substr(0, pos);
      if (c.back() == '*') c.pop_back();
      coeff = parse_number(c);
    }
    std::string rest = s.substr(pos + 4);
    double denom = 1.0;
    if (auto slash = rest.find('/'); slash != std::string::npos) {
      denom = parse_number(rest.substr(slash + 1));
      rest = rest.substr(0, slash);
    }
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    return sign * coeff * std::sqrt(parse_number(rest)) / denom;
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "bad eigenvalue label '" + label + "'");
  }
}

int run_spectrum(const CommonOptions& common, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Stopwatch watch;
    const HamiltonianSpec spec = load_hamiltonian_spec(common.spec_path);
    const NumericAnalysis a = analyze(spec, common.tol);
    watch.lap("eigensolver");

    if (common.format == Format::Csv) {
      out << "value,multiplicity\n";
      for (const auto& c : a.clusters) out << json(num(c.value)).dump() << "," << c.multiplicity << "\n";
      return static_cast<int>(kOk);
    }

    double sum = 0.0;
    double sum_sq = 0.0;
    for (double v : a.eig.values) {
      sum += v;
      sum_sq += v * v;
    }
    bool symmetric = true;
    const auto& vals = a.eig.values;
    for (std::size_t k = 0; k < vals.size(); ++k)
      symmetric = symmetric && std::abs(vals[k] + vals[vals.size() - 1 - k]) <= 1e-10;

    json report;
    report["command"] = "spectrum";
    report["spec"] = spec_json(spec);
    report["dimension"] = spec.dimension();
    report["tolerance"] = num(common.tol);
    report["eigensolver"] = {{"method", "cyclic complex Jacobi"},
                             {"sweeps", a.eig.sweeps},
                             {"max_residual", num(a.eig.residual)}};
    report["trace"] = num(trace(a.matrix).real());
    report["eigenvalue_sum"] = num(sum);
    report["eigenvalue_square_sum"] = num(sum_sq);
    report["cluster_count"] = a.clusters.size();
    report["clusters"] = clusters_json(a.clusters);
    json nondeg = json::array();
    for (const auto& c : a.clusters)
      if (c.multiplicity == 1) nondeg.push_back(num(c.value));
    report["nondegenerate"] = nondeg;
    report["symmetric_about_zero"] = symmetric;
    report["commutant_dimension"] = commutant_dimension(a.clusters);
    return emit(common, std::move(report), watch, out);
  });
}

int run_charpoly(const CommonOptions& common, const CharpolyOptions& opts, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    Stopwatch watch;
    const HamiltonianSpec spec = load_hamiltonian_spec(common.spec_path);
    std::vector<std::pair<ExactPolynomial, unsigned>> factors;
    if (opts.factors_path) factors = load_factored_form(*opts.factors_path);

    const ExactMatrix k = build_hamiltonian<QuadExt>(spec);
    const ExactPolynomial p = char_poly_exact(k);
    watch.lap("char_poly_exact");
    const std::size_t n = k.size();

    json report;
    report["command"] = "charpoly";
    report["spec"] = spec_json(spec);
    report["dimension"] = n;
    report["convention"] = "det(lambda*I - K) = (-1)^n * det(K - lambda*I), monic";
    report["polynomial"] = to_string(p);
    report["coefficients"] = descending_coefficients(p);
    report["integer_coefficients"] = p.has_integer_coefficients();

    const QuadExt tr = trace(k);
    const QuadExt tr2 = trace(ExactMatrix(k * k));
    json checks;
    checks["trace"] = to_string(tr);
    checks["trace_of_square"] = to_string(tr2);
    checks["leading_minus_one_equals_minus_trace"] = n >= 1 && p.coefficient(n - 1) == -tr;
    if (n >= 2)
      checks["leading_minus_two_equals_e2"] =
          p.coefficient(n - 2) == (tr * tr - tr2) * QuadExt(BigRational(1, 2));
    report["coefficient_checks"] = checks;

    int code = kOk;
    if (opts.factors_path) {
      const ExactPolynomial expected = poly_expand(factors);
      json verification;
      verification["factored_form"] = factored_string(factors);
      if (expected == p) {
        verification["status"] = "VERIFIED";
      } else {
        verification["status"] = "MISMATCH";
        const std::size_t top = std::max(expected.degree(), p.degree());
        for (std::size_t d = top + 1; d-- > 0;)
          if (expected.coefficient(d) != p.coefficient(d)) {
            verification["first_mismatch_degree"] = d;
            verification["expected"] = to_string(expected.coefficient(d));
            verification["actual"] = to_string(p.coefficient(d));
            break;
          }
        code = kFactorMismatch;
      }
      report["verification"] = verification;

      if (code == kOk) {
        const NumericAnalysis a = analyze(spec, common.tol);
        watch.lap("eigensolver");
        json roots = json::array();
        for (const auto& c : a.clusters) {
          json entry{{"value", num(c.value)}, {"multiplicity", c.multiplicity}};
          for (const auto& [f, power] : factors) {
            const Complex fv = poly_eval(f, Complex(c.value));
            const Complex fd = poly_eval(poly_derivative(f), Complex(c.value));
            if (std::abs(fd) > 0.0 && std::abs(fv / fd) <= 1e-9) {
              entry["closed_form"] = closed_form(f, c.value);
              entry["factor"] = to_string(f);
              break;
            }
          }
          roots.push_back(entry);
        }
        report["roots"] = roots;
      }
    }
    emit(common, std::move(report), watch, out);
    if (code != kOk) err << "spinlab: characteristic polynomial does not match the factored form\n";
    return code;
  });
}

namespace {

std::vector<Bipartition> cuts_for(const HamiltonianSpec& spec, const std::optional<std::string>& text) {
  const auto dims = spec.dims();
  if (!text) {
    if (dims.size() == 3) return tripartite_cuts(dims);
    std::vector<Bipartition> cuts;
    for (std::size_t t = 1; t < dims.size(); ++t) {
      Bipartition b{dims, {}};
      for (std::size_t f = 0; f < t; ++f) b.left.push_back(f);
      cuts.push_back(b);
    }
    return cuts;
  }
  Bipartition b{dims, {}};
  std::stringstream ss(*text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      const int idx = std::stoi(item);
      if (idx < 1) throw Error(ErrorKind::Parse, "cut indices are 1-based");
      b.left.push_back(static_cast<std::size_t>(idx - 1));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, "bad cut '" + *text + "'");
    }
  }
  b.validate();
  return {b};
}

json index_list(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

}  // namespace

int run_schmidt(const CommonOptions& common, const SchmidtOptions& opts, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    Stopwatch watch;
    const HamiltonianSpec spec = load_hamiltonian_spec(common.spec_path);
    const double target = parse_eigenvalue_label(opts.eigenvalue);
    const auto cuts = cuts_for(spec, opts.cut);
    const NumericAnalysis a = analyze(spec, common.tol);
    watch.lap("eigensolver");

    const EigenCluster* match = nullptr;
    for (const auto& c : a.clusters)
      if (std::abs(c.value - target) <= 1e-9) match = &c;
    if (match == nullptr) {
      err << "spinlab: no eigenvalue within 1e-9 of " << opts.eigenvalue << " (" << target << ")\n";
      return static_cast<int>(kMalformedInput);
    }
    if (match->multiplicity != 1) {
      err << "spinlab: eigenvalue " << opts.eigenvalue << " has multiplicity " << match->multiplicity
          << "; Schmidt analysis needs a non-degenerate eigenvalue\n";
      return static_cast<int>(kDegenerateEigenvalue);
    }

    const ComplexVector w = phase_fixed(match->basis.front());
    json report;
    report["command"] = "schmidt";
    report["spec"] = spec_json(spec);
    report["eigenvalue_label"] = opts.eigenvalue;
    report["eigenvalue"] = num(match->value);
    report["multiplicity"] = match->multiplicity;
    report["residual"] = num(eigen_residual(a.matrix, match->value, w));
    report["rank_tolerance"] = num(kDefaultRankTol);
    report["eigenvector"] = vector_json(w);

    json cut_reports = json::array();
    for (const auto& cut : cuts) {
      const SchmidtResult r = schmidt(w, cut);
      const ComplexVector back = reconstruct(r);
      double recon = 0.0;
      for (std::size_t k = 0; k < w.size(); ++k) recon = std::max(recon, std::abs(back[k] - w[k]));
      json coeffs = json::array();
      for (double c : r.coefficients) coeffs.push_back(num(c));
      json terms = json::array();
      for (std::size_t i = 0; i < r.rank; ++i)
        terms.push_back({{"coefficient", num(r.coefficients[i])},
                         {"left_vector", vector_json(r.left_vectors[i])},
                         {"right_vector", vector_json(r.right_vectors[i])}});
      cut_reports.push_back({{"left", index_list(cut.left)},
                             {"right", index_list(cut.right())},
                             {"coefficients", coeffs},
                             {"rank", r.rank},
                             {"entropy", num(entanglement_entropy(r))},
                             {"reconstruction_error", num(recon)},
                             {"terms", terms}});
    }
    report["cuts"] = cut_reports;
    watch.lap("schmidt");

    const HamiltonianSpec pg = photon_graviton_spec();
    if (spec.factors == pg.factors && spec.terms == pg.terms &&
        std::abs(std::abs(match->value) - std::sqrt(3.0)) <= 1e-9) {
      const auto branch = match->value > 0 ? SqrtThreeBranch::Plus : SqrtThreeBranch::Minus;
      const ReferenceCheck check = verify_schmidt_against_reference(w, branch);
      report["reference_check"] = {{"matches", check.matches},
                                   {"max_deviation", num(check.max_deviation)},
                                   {"all_cuts_rank3_uniform", check.ok()},
                                   {"summary", check.summary()}};
    }
    return emit(common, std::move(report), watch, out);
  });
}

int run_symmetry(const CommonOptions& common, const SymmetryOptions& opts, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    if (!opts.check && !opts.search && !opts.commutant_dim) {
      err << "spinlab: symmetry needs --check, --search or --commutant-dim\n";
      return static_cast<int>(kMalformedInput);
    }
    Stopwatch watch;
    const HamiltonianSpec spec = load_hamiltonian_spec(common.spec_path);
    json report;
    report["command"] = "symmetry";
    report["spec"] = spec_json(spec);

    if (opts.check) {
      const PermutationMatrix p = parse_factor_product(*opts.check, spec.dims());
      json check{{"permutation", *opts.check}, {"one_line", p.one_line()}};
      SymmetryCheck result;
      try {
        result = is_symmetry(p, build_hamiltonian<QuadExt>(spec));
        check["mode"] = "exact";
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnrepresentableRadical) throw;
        result = is_symmetry(p, build_hamiltonian<Complex>(spec), 1e-10);
        check["mode"] = "float";
      }
      check["verdict"] = result.holds ? "SYMMETRY" : "NOT A SYMMETRY";
      check["max_deviation"] = num(result.max_deviation);
      report["check"] = check;
      watch.lap("check");
    }
    if (opts.search) {
      const auto found = search_factor_symmetries(spec, default_factor_generators(spec));
      json list = json::array();
      for (const auto& p : found) list.push_back({{"one_line", p.one_line()}, {"verified", "exact"}});
      bool closed = true;
      for (const auto& a : found)
        for (const auto& b : found)
          closed = closed && std::binary_search(found.begin(), found.end(), a.compose(b));
      report["search"] = {{"candidates", "id/not per factor, with dimension-preserving factor reorderings"},
                          {"count", found.size()},
                          {"closed_under_composition", closed},
                          {"symmetries", list}};
      watch.lap("search");
    }
    if (opts.commutant_dim) {
      const NumericAnalysis a = analyze(spec, common.tol);
      json sizes = json::array();
      json values = json::array();
      for (auto j : commutant_block_order(a.clusters)) {
        sizes.push_back(a.clusters[j].multiplicity);
        values.push_back(num(a.clusters[j].value));
      }
      report["commutant"] = {{"dimension", commutant_dimension(a.clusters)},
                             {"block_sizes", sizes},
                             {"block_values", values},
                             {"tolerance", num(common.tol)}};
      watch.lap("commutant");
    }
    return emit(common, std::move(report), watch, out);
  });
}

int run_bound(const CommonOptions& common, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Stopwatch watch;
    const HamiltonianSpec spec = load_hamiltonian_spec(common.spec_path);
    const NumericAnalysis a = analyze(spec, common.tol);
    const double bound = row_sum_bound(a.matrix);
    double max_abs_eig = 0.0;
    for (double v : a.eig.values) max_abs_eig = std::max(max_abs_eig, std::abs(v));

    json report;
    report["command"] = "bound";
    report["spec"] = spec_json(spec);
    report["row_sum_bound"] = num(bound);
    try {
      report["row_sum_bound_exact"] = to_string(row_sum_bound(build_hamiltonian<QuadExt>(spec)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnrepresentableRadical) throw;
      report["row_sum_bound_exact"] = nullptr;
    }
    report["max_abs_eigenvalue"] = num(max_abs_eig);
    report["ratio"] = bound > 0.0 ? num(max_abs_eig / bound) : json(nullptr);
    report["bound_holds"] = max_abs_eig <= bound + 1e-12;
    watch.lap("bound");
    return emit(common, std::move(report), watch, out);
  });
}

}  // namespace spinlab::cli

#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_common(CLI::App* cmd, spinlab::cli::CommonOptions& opts, bool allow_csv) {
  cmd->add_option("--spec", opts.spec_path, "Hamiltonian spec file (JSON)")->required();
  std::map<std::string, spinlab::cli::Format> formats{{"json", spinlab::cli::Format::Json},
                                                      {"text", spinlab::cli::Format::Text}};
  if (allow_csv) formats.emplace("csv", spinlab::cli::Format::Csv);
  cmd->add_option("--format", opts.format, "Report format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--tol", opts.tol, "Eigenvalue clustering tolerance")
      ->envname("SPINLAB_TOL")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--timings", opts.timings, "Include wall-clock timings (breaks byte-identical output)");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = spinlab::cli;
  CLI::App app{"spinlab: coupled spin Hamiltonians, exact spectra, entanglement and symmetries"};
  app.require_subcommand(1);

  cli::CommonOptions common;
  cli::CharpolyOptions charpoly_opts;
  cli::SchmidtOptions schmidt_opts;
  cli::SymmetryOptions symmetry_opts;

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalue clusters with multiplicities");
  add_common(spectrum, common, true);

  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial");
  add_common(charpoly, common, false);
  charpoly->add_option("--factors", charpoly_opts.factors_path, "Factored form to verify (JSON)");

  auto* schmidt = app.add_subcommand("schmidt", "Schmidt decomposition of a non-degenerate eigenvector");
  add_common(schmidt, common, false);
  schmidt->add_option("--eigenvalue", schmidt_opts.eigenvalue, "Eigenvalue label, e.g. sqrt3 or -sqrt3")
      ->required();
  schmidt->add_option("--cut", schmidt_opts.cut, "Left factor indices, 1-based, e.g. 1,3");

  auto* symmetry = app.add_subcommand("symmetry", "Permutation symmetries and the commutant");
  add_common(symmetry, common, false);
  symmetry->add_option("--check", symmetry_opts.check, "Per-factor permutation, e.g. \"not x id x not\"");
  symmetry->add_flag("--search", symmetry_opts.search, "Search Kronecker-structured permutations");
  symmetry->add_flag("--commutant-dim", symmetry_opts.commutant_dim, "Dimension of the commutant");

  auto* bound = app.add_subcommand("bound", "Row-sum eigenvalue bound");
  add_common(bound, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kMalformedInput;
  }

  if (spectrum->parsed()) return cli::run_spectrum(common, std::cout, std::cerr);
  if (charpoly->parsed()) return cli::run_charpoly(common, charpoly_opts, std::cout, std::cerr);
  if (schmidt->parsed()) return cli::run_schmidt(common, schmidt_opts, std::cout, std::cerr);
  if (symmetry->parsed()) return cli::run_symmetry(common, symmetry_opts, std::cout, std::cerr);
  if (bound->parsed()) return cli::run_bound(common, std::cout, std::cerr);
  return cli::kMalformedInput;
}

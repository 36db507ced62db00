#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "casimir/error.hpp"
#include "commands.hpp"

using namespace casimir;

int main(int argc, char** argv) {
  CLI::App app{"Projective Poincare charges, lattice generators, Casimir energies and adiabatic mode evolution"};
  app.set_config("--config", "", "INI file with one [section] per subcommand; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  cli::CocycleArgs cocycle;
  cli::AlgebraVerifyArgs verify;
  cli::CasimirArgs casimir_args;
  cli::AdiabaticArgs adiabatic;
  auto* s_cocycle = app.add_subcommand("cocycle", "Jacobi, cocycle and coboundary analysis of a Lie algebra");
  auto* s_verify = app.add_subcommand("algebra-verify", "Lattice check of the central relation and Poincare closure");
  auto* s_casimir = app.add_subcommand("casimir", "Regularised plate energies, forces and central-charge differences");
  auto* s_adiabatic = app.add_subcommand("adiabatic", "Bogoliubov coefficients along the plate schedule");
  for (auto* s : {s_cocycle, s_verify, s_casimir, s_adiabatic}) s->allow_config_extras(CLI::config_extras_mode::error);
  cli::add_cocycle_options(*s_cocycle, cocycle);
  cli::add_algebra_verify_options(*s_verify, verify);
  cli::add_casimir_options(*s_casimir, casimir_args);
  cli::add_adiabatic_options(*s_adiabatic, adiabatic);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::ok : cli::input_error;
  }

  try {
    if (s_cocycle->parsed()) return cli::run_cocycle(cocycle);
    if (s_verify->parsed()) return cli::run_algebra_verify(verify);
    if (s_casimir->parsed()) return cli::run_casimir(casimir_args);
    if (s_adiabatic->parsed()) return cli::run_adiabatic(adiabatic);
  } catch (const IntegrationError& e) {
    std::cerr << "integrator error at t = " << e.time() << ": " << e.what() << '\n';
    return cli::integrator_error;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return cli::numerical_error;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return cli::input_error;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return cli::input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::numerical_error;
  }
  return cli::input_error;
}

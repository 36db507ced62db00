#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace casimir::cli {

enum ExitCode : int { ok = 0, input_error = 2, numerical_error = 3, integrator_error = 4 };

struct CocycleArgs {
  std::string builtin;
  std::string file;
  std::string labels;       // comma-separated renaming of the basis
  std::string charges;      // c0,c1,c2 for poincare21
  std::string charges_raw;  // "a,b=v;..."
  int random_trials = 0;
  std::uint64_t seed = 1;
  std::string out = ".";
};

struct AlgebraVerifyArgs {
  std::string check = "central";  // central | poincare
  std::string demo;               // contradiction
  std::vector<double> spacings{0.2, 0.1, 0.05};
  double size = 8.0;
  int dims = 1;
  double L0 = 1.0;
  double L1 = 2.0;
  int n = 1;
  double window_fraction = 0.25;
  double min_order = 1.9;
  double scalar_tolerance = 1e-9;
  int closure_dims = 2;
  std::size_t sites = 16;
  double spacing = 0.5;
  double mass = 1.0;
  double closure_tolerance = 1e-10;
  std::string out = ".";
};

struct CasimirArgs {
  std::vector<double> L{1.0};
  bool diff = false;
  int mode = 0;  // > 0 restricts the difference to one tower
  std::vector<std::string> methods{"zeta", "abel_plana", "cutoff_extrapolation"};
  double tolerance = 1e-8;
  std::string out = ".";
};

struct AdiabaticArgs {
  double L0 = 1.0;
  double L1 = 2.0;
  std::vector<double> T{2.0, 4.0, 8.0};
  std::vector<int> n{1};
  std::vector<double> k{0.0};
  double rtol = 1e-12;
  std::size_t samples = 201;
  double threshold = 1e-6;
  bool sudden_check = false;
  double sudden_T = 1e-4;
  double sudden_tolerance = 1e-3;
  std::string out = ".";
};

void add_cocycle_options(CLI::App& sub, CocycleArgs& args);
void add_algebra_verify_options(CLI::App& sub, AlgebraVerifyArgs& args);
void add_casimir_options(CLI::App& sub, CasimirArgs& args);
void add_adiabatic_options(CLI::App& sub, AdiabaticArgs& args);

int run_cocycle(const CocycleArgs& args);
int run_algebra_verify(const AlgebraVerifyArgs& args);
int run_casimir(const CasimirArgs& args);
int run_adiabatic(const AdiabaticArgs& args);

}  // namespace casimir::cli

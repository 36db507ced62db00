#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "casimir/energy/casimir_energy.hpp"
#include "casimir/error.hpp"
#include "casimir/io/csv.hpp"
#include "commands.hpp"

namespace casimir::cli {

void add_casimir_options(CLI::App& sub, CasimirArgs& a) {
  sub.add_option("--L", a.L, "Plate gaps (repeatable or comma separated)")->delimiter(',')->check(CLI::PositiveNumber);
  sub.add_flag("--diff", a.diff, "Add E(L_first) - E(L) for every row");
  sub.add_option("--mode", a.mode, "Restrict the difference to one mode tower n")->check(CLI::NonNegativeNumber);
  sub.add_option("--methods", a.methods, "Routes to evaluate")
      ->delimiter(',')
      ->check(CLI::IsMember({"zeta", "abel_plana", "cutoff_extrapolation"}));
  sub.add_option("--tolerance", a.tolerance, "Relative agreement required between routes")->check(CLI::PositiveNumber);
  sub.add_option("--out", a.out, "Output directory");
}

int run_casimir(const CasimirArgs& args) {
  if (args.L.empty()) throw InputError("give at least one --L");
  if (args.methods.empty()) throw InputError("give at least one method");
  std::vector<energy::Method> methods;
  for (const auto& m : args.methods) methods.push_back(energy::parse_method(m));

  io::CsvWriter csv(std::filesystem::path(args.out) / "casimir.csv",
                    {"L", "method", "energy_per_area", "error_estimate", "force_per_area", "zeta_deviation",
                     "central_charge_difference"});
  bool pass = true;
  const std::optional<int> single = args.mode > 0 ? std::optional<int>(args.mode) : std::nullopt;
  for (double L : args.L) {
    const energy::RegularizedSum ref = energy::casimir_energy_per_area(L, energy::Method::zeta);
    const energy::ForcePerArea force = energy::casimir_force_per_area(L);
    if (force.relative_difference > 1e-6) {
      std::printf("FAIL L = %g force finite difference off by %.2e\n", L, force.relative_difference);
      pass = false;
    }
    for (energy::Method m : methods) {
      const energy::RegularizedSum r = m == energy::Method::zeta ? ref : energy::casimir_energy_per_area(L, m);
      const double deviation = r.value - ref.value;
      const bool agree = std::abs(deviation) <= args.tolerance * std::abs(ref.value);
      pass = pass && agree;
      io::CsvCell diff = std::string();
      if (args.diff) diff = energy::central_charge_difference(args.L.front(), L, single, m);
      csv.row({L, std::string(energy::method_name(m)), r.value, r.error_estimate, force.analytic, deviation, diff});
      std::printf("L = %-8g %-22s E = %.12e  err %.2e  F = %.12e%s\n", L, energy::method_name(m).data(), r.value,
                  r.error_estimate, force.analytic, agree ? "" : "  DISAGREES");
      if (args.diff)
        std::printf("%35s E(%g) - E(%g) = %.12e\n", "", args.L.front(), L, std::get<double>(diff));
    }
  }
  std::printf("%s routes agree within %.1e relative\n", pass ? "PASS" : "FAIL", args.tolerance);
  return pass ? ok : numerical_error;
}

}  // namespace casimir::cli

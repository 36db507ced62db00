#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "casimir/energy/casimir_energy.hpp"
#include "casimir/error.hpp"
#include "casimir/io/csv.hpp"
#include "casimir/lattice/central_relation.hpp"
#include "commands.hpp"

namespace casimir::cli {

void add_algebra_verify_options(CLI::App& sub, AlgebraVerifyArgs& a) {
  sub.add_option("--check", a.check, "central (spacing sweep) or poincare (periodic closure)")
      ->check(CLI::IsMember({"central", "poincare"}));
  sub.add_option("--demo", a.demo, "contradiction: vacuum energy bound of the unshifted Hamiltonian")
      ->check(CLI::IsMember({"contradiction"}));
  sub.add_option("--spacings", a.spacings, "Lattice spacings of the sweep")->delimiter(',')->check(CLI::PositiveNumber);
  sub.add_option("--size", a.size, "Physical transverse size; N = round(size / a)")->check(CLI::PositiveNumber);
  sub.add_option("--dims", a.dims, "Transverse dimensions")->check(CLI::Range(1, 2));
  sub.add_option("--L0", a.L0, "Plate gap of the first configuration")->check(CLI::PositiveNumber);
  sub.add_option("--L1", a.L1, "Plate gap of the second configuration")->check(CLI::PositiveNumber);
  sub.add_option("--n", a.n, "Mode tower index; mass n pi / L")->check(CLI::PositiveNumber);
  sub.add_option("--window-fraction", a.window_fraction, "Bulk window as a fraction of N")->check(CLI::Range(0.0, 0.5));
  sub.add_option("--min-order", a.min_order, "Required fitted convergence order");
  sub.add_option("--scalar-tolerance", a.scalar_tolerance, "Relative tolerance of the scalar slot")->check(CLI::PositiveNumber);
  sub.add_option("--closure-dims", a.closure_dims, "Dimensions for --check poincare")->check(CLI::Range(1, 2));
  sub.add_option("--sites", a.sites, "Sites per dimension for --check poincare and --demo")->check(CLI::Range(3, 4096));
  sub.add_option("--spacing", a.spacing, "Spacing for --check poincare and --demo")->check(CLI::PositiveNumber);
  sub.add_option("--mass", a.mass, "Mass for --check poincare and --demo")->check(CLI::PositiveNumber);
  sub.add_option("--closure-tolerance", a.closure_tolerance, "Bound on closure residual norms")->check(CLI::PositiveNumber);
  sub.add_option("--out", a.out, "Output directory");
}

namespace {

int run_central(const AlgebraVerifyArgs& args) {
  const double m0 = energy::mode_mass(args.n, args.L0);
  const double m1 = energy::mode_mass(args.n, args.L1);
  for (double a : args.spacings) {
    const auto n_sites = std::lround(args.size / a);
    const auto window = static_cast<long>(std::floor(static_cast<double>(n_sites) * args.window_fraction));
    if (n_sites < 3 || window < 1 || 2 * window >= n_sites)
      throw InputError("spacing " + std::to_string(a) + " gives " + std::to_string(n_sites) +
                       " sites, too few for the bulk window");
  }
  if (args.spacings.size() < 2) throw InputError("the spacing sweep needs at least 2 spacings");

  lattice::CentralRelationOptions opts;
  opts.window_fraction = args.window_fraction;
  const lattice::ConvergenceStudy study =
      lattice::central_relation_sweep(args.spacings, args.size, args.dims, m0, m1, opts);

  io::CsvWriter csv(std::filesystem::path(args.out) / "central_relation.csv",
                    {"config", "L", "mass", "spacing", "sites", "window", "central_charge", "zero_point_sum",
                     "scalar_slot", "scalar_discrepancy", "vacuum_commutator", "bulk_residual", "full_residual"});
  double worst_scalar = 0.0;
  std::printf("%-6s %-10s %-6s %-16s %-12s %-12s %-12s\n", "config", "spacing", "N", "E(L)", "scalar_disc",
              "bulk_resid", "<[K,P]>");
  for (const auto& r : study.records) {
    const double L = r.config == 0 ? args.L0 : args.L1;
    csv.row({std::string(r.config == 0 ? "L0" : "L1"), L, r.mass, r.spacing, static_cast<std::int64_t>(r.sites_per_dim),
             static_cast<std::int64_t>(r.window), r.central_charge, r.zero_point_sum, r.scalar_slot,
             r.scalar_discrepancy, r.vacuum_commutator, r.bulk_residual, r.full_residual});
    worst_scalar = std::max(worst_scalar, r.scalar_discrepancy);
    std::printf("%-6s %-10.4g %-6zu %-16.10g %-12.3e %-12.5e %-12.5e\n", r.config == 0 ? "L0" : "L1", r.spacing,
                r.sites_per_dim, r.central_charge, r.scalar_discrepancy, r.bulk_residual, r.vacuum_commutator);
  }
  for (const auto& rep : study.reports)
    std::printf("a = %-8.4g E(L0) - E(L1) = %.10g\n", rep.records[0].spacing, rep.central_charge_difference);
  std::printf("fitted order: L0 %.4f, L1 %.4f\n", study.fitted_order[0], study.fitted_order[1]);
  const bool order_ok = study.fitted_order[0] >= args.min_order && study.fitted_order[1] >= args.min_order;
  const bool scalar_ok = worst_scalar <= args.scalar_tolerance;
  const bool pass = order_ok && scalar_ok;
  std::printf("%s central relation: order >= %.3g %s, scalar slot within %.1e %s\n", pass ? "PASS" : "FAIL",
              args.min_order, order_ok ? "yes" : "no", args.scalar_tolerance, scalar_ok ? "yes" : "no");
  return pass ? ok : numerical_error;
}

int run_poincare(const AlgebraVerifyArgs& args) {
  lattice::LatticeGeometry geom;
  geom.dims = args.closure_dims;
  geom.sites_per_dim = args.sites;
  geom.spacing = args.spacing;
  geom.boundary = lattice::Boundary::periodic;
  geom.validate();
  const lattice::PoincareClosure c = lattice::poincare_closure(geom, args.mass);
  io::CsvWriter csv(std::filesystem::path(args.out) / "poincare_closure.csv", {"commutator", "residual_norm", "asserted"});
  bool pass = true;
  auto report = [&](const char* name, double v, bool asserted) {
    csv.row({std::string(name), v, static_cast<std::int64_t>(asserted)});
    const bool good = v < args.closure_tolerance;
    if (asserted) pass = pass && good;
    std::printf("%-8s %.3e%s\n", name, v, asserted ? (good ? "" : "  above tolerance") : "  (not asserted)");
  };
  if (geom.dims == 2) report("[P1,P2]", c.p1_p2, true);
  report("[H,P1]", c.h_p[0], true);
  if (geom.dims == 2) report("[H,P2]", c.h_p[1], true);
  if (c.has_rotation) report("[J,H]", c.j_h, false);
  std::printf("%s translation closure on a periodic %zu^%d lattice below %.1e\n", pass ? "PASS" : "FAIL", geom.sites_per_dim,
              geom.dims, args.closure_tolerance);
  return pass ? ok : numerical_error;
}

int run_contradiction(const AlgebraVerifyArgs& args) {
  lattice::LatticeGeometry geom;
  geom.dims = args.dims;
  geom.sites_per_dim = args.sites;
  geom.spacing = args.spacing;
  geom.boundary = lattice::Boundary::open;
  const lattice::ContradictionReport r = lattice::contradiction_demo(geom, args.mass);
  std::printf("modes M = %zu, mass m = %.6g, lowest frequency %.10g\n", r.modes, r.mass, r.lowest_frequency);
  std::printf("<0|H|0> >= 1/2 sum w_k = %.12g (covariance trace %.12g)\n", r.zero_point_sum, r.vacuum_expectation);
  std::printf("1/2 sum w_k >= M m / 2 = %.12g > 0\n", r.mode_bound);
  std::printf("%s <0|H|0> = 0 is unattainable without a constant shift\n", r.contradiction ? "PASS" : "FAIL");
  return r.contradiction ? ok : numerical_error;
}

}  // namespace

int run_algebra_verify(const AlgebraVerifyArgs& args) {
  if (args.demo == "contradiction") return run_contradiction(args);
  if (args.check == "poincare") return run_poincare(args);
  return run_central(args);
}

}  // namespace casimir::cli

#include <cmath>
#include <cstdio>
#include <filesystem>

#include <CLI11.hpp>

#include "casimir/adiabatic/evolution.hpp"
#include "casimir/error.hpp"
#include "casimir/io/csv.hpp"
#include "commands.hpp"

namespace casimir::cli {

void add_adiabatic_options(CLI::App& sub, AdiabaticArgs& a) {
  sub.add_option("--L0", a.L0, "Initial plate gap")->check(CLI::PositiveNumber);
  sub.add_option("--L1", a.L1, "Final plate gap")->check(CLI::PositiveNumber);
  sub.add_option("--T", a.T, "Schedule half-durations, increasing")->delimiter(',')->check(CLI::PositiveNumber);
  sub.add_option("--n", a.n, "Mode tower indices")->delimiter(',')->check(CLI::PositiveNumber);
  sub.add_option("--k", a.k, "Transverse momenta")->delimiter(',')->check(CLI::NonNegativeNumber);
  sub.add_option("--rtol", a.rtol, "Integrator relative tolerance (<= 1e-10)")->check(CLI::Range(1e-16, 1e-10));
  sub.add_option("--samples", a.samples, "Trajectory samples per run");
  sub.add_option("--threshold", a.threshold, "Particle number regarded as adiabatic")->check(CLI::PositiveNumber);
  sub.add_flag("--sudden-check", a.sudden_check, "Compare a very fast schedule with the sudden closed form");
  sub.add_option("--sudden-T", a.sudden_T, "Half-duration used by --sudden-check")->check(CLI::PositiveNumber);
  sub.add_option("--sudden-tolerance", a.sudden_tolerance, "Relative tolerance of --sudden-check")->check(CLI::PositiveNumber);
  sub.add_option("--out", a.out, "Output directory");
}

int run_adiabatic(const AdiabaticArgs& args) {
  if (args.T.empty() || args.n.empty() || args.k.empty()) throw InputError("--T, --n and --k need at least one value");
  for (std::size_t i = 1; i < args.T.size(); ++i)
    if (!(args.T[i] > args.T[i - 1])) throw InputError("--T values must be strictly increasing");
  adiabatic::EvolutionOptions ev;
  ev.rtol = args.rtol;
  ev.samples = args.samples;
  const std::filesystem::path out(args.out);

  io::CsvWriter scan_csv(out / "adiabatic_scan.csv", {"n", "k", "T", "alpha_re", "alpha_im", "beta_re", "beta_im",
                                                      "particle_number", "wronskian_drift"});
  io::CsvWriter traj_csv(out / "trajectory.csv",
                         {"n", "k", "T", "t", "L", "omega", "f_re", "f_im", "fdot_re", "fdot_im", "wronskian"});
  int status = ok;
  for (int n : args.n)
    for (double k : args.k) {
      std::vector<double> particles;
      for (double T : args.T) {
        const adiabatic::ModeEvolution e = adiabatic::evolve_mode({args.L0, args.L1, T}, n, k, ev);
        const auto& r = e.result;
        scan_csv.row({static_cast<std::int64_t>(n), k, T, r.alpha.real(), r.alpha.imag(), r.beta.real(),
                      r.beta.imag(), r.particle_number, r.wronskian_drift});
        for (const auto& s : e.trajectory.samples)
          traj_csv.row({static_cast<std::int64_t>(n), k, T, s.t, s.L, s.omega, s.f.real(), s.f.imag(), s.fdot.real(),
                        s.fdot.imag(), s.wronskian});
        particles.push_back(r.particle_number);
        std::printf("n = %d k = %-8g T = %-8g |beta|^2 = %.6e  drift %.2e  |a|^2-|b|^2-1 = %.1e\n", n, k, T,
                    r.particle_number, r.wronskian_drift, r.norm_defect);
      }
      if (args.T.size() >= 3) {
        adiabatic::ScanOptions so;
        so.evolution = ev;
        so.particle_threshold = args.threshold;
        const adiabatic::ScanReport rep = adiabatic::adiabatic_scan(args.L0, args.L1, args.T, n, k, so);
        const double p = rep.decay_exponents.back();
        std::printf("  decay exponent between the two largest T: %.4g\n", p);
        if (rep.threshold_T)
          std::printf("  |beta|^2 < %.1e first at T = %g\n", args.threshold, *rep.threshold_T);
        else if (rep.extrapolated_threshold_T)
          std::printf("  |beta|^2 < %.1e expected near T = %.4g (extrapolated)\n", args.threshold,
                      *rep.extrapolated_threshold_T);
        std::printf("  %s |beta|^2 decreasing in T\n", rep.monotone ? "PASS" : "FAIL");
        if (!rep.monotone) status = numerical_error;
      }
      const auto shift = adiabatic::vacuum_energy_shift({args.L0, args.L1, args.T.back()}, {{n, k}}, ev).front();
      std::printf("  zero-point shift (w_out - w_in)/2 = %.12g, adiabatic violation w_out |beta|^2 = %.6e\n",
                  shift.zero_point_shift, shift.violation);
    }

  if (args.sudden_check) {
    adiabatic::EvolutionOptions quick = ev;
    quick.samples = 0;
    for (int n : args.n)
      for (double k : args.k) {
        const auto r = adiabatic::evolve_mode({args.L0, args.L1, args.sudden_T}, n, k, quick).result;
        const double closed = adiabatic::sudden_beta(r.omega_in, r.omega_out);
        const double got = std::abs(r.beta);
        const double rel = closed > 0.0 ? std::abs(got - closed) / closed : got;
        const bool good = rel <= args.sudden_tolerance;
        std::printf("%s sudden limit n = %d k = %g T = %g: |beta| = %.9f, closed form %.9f, rel. diff %.2e\n",
                    good ? "PASS" : "FAIL", n, k, args.sudden_T, got, closed, rel);
        if (!good) status = numerical_error;
      }
  }
  return status;
}

}  // namespace casimir::cli

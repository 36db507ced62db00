#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "casimir/adiabatic/schedule.hpp"

namespace casimir::adiabatic {

/// omega(t)^2 = k^2 + (n pi / L(t))^2
double mode_frequency(int n, double k, double L);

struct EvolutionOptions {
  double rtol = 1e-12;
  double atol = 1e-14;
  /// Largest step as a fraction of the shortest local period 2 pi / omega.
  double period_fraction = 1.0 / 16.0;
  /// Equally spaced trajectory samples on [-T, T]; 0 keeps none, 1 keeps t = T.
  std::size_t samples = 0;
  double wronskian_tolerance = 1e-8;
};

struct TrajectorySample {
  double t = 0.0;
  double L = 0.0;
  double omega = 0.0;
  std::complex<double> f;
  std::complex<double> fdot;
  double wronskian = 0.0;
};

struct ModeTrajectory {
  int n = 1;
  double k = 0.0;
  double omega_in = 0.0;
  double omega_out = 0.0;
  std::vector<TrajectorySample> samples;
};

struct BogoliubovResult {
  std::complex<double> alpha;
  std::complex<double> beta;
  double particle_number = 0.0;  // |beta|^2
  double energy_final = 0.0;     // omega_out (|beta|^2 + 1/2)
  double omega_in = 0.0;
  double omega_out = 0.0;
  double wronskian_drift = 0.0;  // max |W(t) - 1| at 65 or more checkpoints
  double norm_defect = 0.0;      // | |alpha|^2 - |beta|^2 - 1 |
};

struct ModeEvolution {
  BogoliubovResult result;
  ModeTrajectory trajectory;
};

/// Solves f'' + omega(t)^2 f = 0 from f(-T) = e^{i omega_in T} / sqrt(2 omega_in),
/// f'(-T) = -i omega_in f(-T), and at t = T writes f = alpha u + beta u* with
/// u = e^{-i omega_out t} / sqrt(2 omega_out):
///   alpha = <u, f>,  beta = -<u*, f>,  <g, h> = i (g* h' - g' * h).
///
/// Throws InputError for n < 1, k < 0 or rtol > 1e-10, and IntegrationError
/// (with the time reached) on step failure or Wronskian drift beyond tolerance.
ModeEvolution evolve_mode(const Schedule& s, int n, double k, const EvolutionOptions& options = {});

/// |omega_in - omega_out| / (2 sqrt(omega_in omega_out)): |beta| for an
/// instantaneous jump with f and f' continuous.
double sudden_beta(double omega_in, double omega_out);

struct ScanOptions {
  EvolutionOptions evolution;
  double particle_threshold = 1e-6;
  /// |beta|^2 values below this are integration noise and count as converged.
  double noise_floor = 1e-20;
  bool parallel = true;
};

struct ScanRow {
  double T = 0.0;
  BogoliubovResult result;
};

struct ScanReport {
  int n = 1;
  double k = 0.0;
  std::vector<ScanRow> rows;
  /// -d log|beta|^2 / d log T between consecutive rows (NaN at the noise floor).
  std::vector<double> decay_exponents;
  bool monotone = true;
  /// First listed T with |beta|^2 below particle_threshold.
  std::optional<double> threshold_T;
  /// Power-law extrapolation of the last exponent when no listed T reaches it.
  std::optional<double> extrapolated_threshold_T;
};

/// Evolves the schedule family (L0, L1, T) for each T. T list must be strictly
/// increasing with at least 3 entries (InputError otherwise). A non-monotone
/// tail is flagged in `monotone`, not thrown.
ScanReport adiabatic_scan(double L0, double L1, const std::vector<double>& T_list, int n, double k,
                          const ScanOptions& options = {});

struct ModeSpec {
  int n = 1;
  double k = 0.0;
};

struct EnergyShiftRow {
  ModeSpec mode;
  double omega_in = 0.0;
  double omega_out = 0.0;
  double violation = 0.0;         // energy_final - omega_out / 2 = omega_out |beta|^2
  double zero_point_shift = 0.0;  // omega_out / 2 - omega_in / 2
  BogoliubovResult result;
};

std::vector<EnergyShiftRow> vacuum_energy_shift(const Schedule& s, const std::vector<ModeSpec>& modes,
                                                const EvolutionOptions& options = {});

/// k = 0 followed by `count` logarithmically spaced values in [k_min, k_max].
std::vector<double> log_k_grid(double k_min, double k_max, std::size_t count);

}  // namespace casimir::adiabatic

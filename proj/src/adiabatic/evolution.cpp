#include "casimir/adiabatic/evolution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "casimir/error.hpp"

namespace casimir::adiabatic {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 4>;  // Re f, Im f, Re f', Im f'

constexpr std::complex<double> I(0.0, 1.0);

double wronskian(std::complex<double> f, std::complex<double> fdot) {
  return (I * (std::conj(f) * fdot - std::conj(fdot) * f)).real();
}

// <g, h> = i (g* h' - g'* h)
std::complex<double> kg_product(std::complex<double> g, std::complex<double> gdot, std::complex<double> h,
                                std::complex<double> hdot) {
  return I * (std::conj(g) * hdot - std::conj(gdot) * h);
}

std::string describe(int n, double k, double T) {
  std::ostringstream os;
  os << "(n=" << n << ", k=" << k << ", T=" << T << ")";
  return os.str();
}

}  // namespace

double mode_frequency(int n, double k, double L) {
  const double m = n * std::numbers::pi / L;
  return std::sqrt(k * k + m * m);
}

ModeEvolution evolve_mode(const Schedule& s, int n, double k, const EvolutionOptions& options) {
  s.validate();
  if (n < 1) throw InputError("mode index n must be >= 1");
  if (!(k >= 0.0) || !std::isfinite(k)) throw InputError("transverse momentum k must be >= 0");
  if (!(options.rtol > 0.0) || options.rtol > 1e-10) throw InputError("integrator rtol must lie in (0, 1e-10]");
  if (!(options.atol > 0.0)) throw InputError("integrator atol must be positive");

  ModeEvolution out;
  ModeTrajectory& traj = out.trajectory;
  traj.n = n;
  traj.k = k;
  const double w_in = mode_frequency(n, k, s.L0);
  const double w_out = mode_frequency(n, k, s.L1);
  traj.omega_in = w_in;
  traj.omega_out = w_out;

  const double T = s.T;
  const std::complex<double> f0 = std::exp(I * w_in * T) / std::sqrt(2.0 * w_in);
  State x{f0.real(), f0.imag(), (-I * w_in * f0).real(), (-I * w_in * f0).imag()};

  double last_t = -T;
  auto rhs = [&](const State& y, State& dy, double t) {
    last_t = t;
    const double w = mode_frequency(n, k, s.eval(t));
    const double w2 = w * w;
    dy = {y[2], y[3], -w2 * y[0], -w2 * y[1]};
  };

  // Checkpoints refine the sample grid by an integer stride.
  const std::size_t stride = options.samples >= 2 ? (64 + options.samples - 2) / (options.samples - 1) : 1;
  const std::size_t checkpoints = options.samples >= 2 ? (options.samples - 1) * stride + 1 : 65;
  std::vector<double> times(checkpoints);
  for (std::size_t j = 0; j < checkpoints; ++j)
    times[j] = -T + 2.0 * T * static_cast<double>(j) / static_cast<double>(checkpoints - 1);
  times.back() = T;

  double drift = 0.0;
  std::size_t seen = 0;
  auto observer = [&](const State& y, double t) {
    const std::complex<double> f(y[0], y[1]);
    const std::complex<double> fd(y[2], y[3]);
    const double w = wronskian(f, fd);
    drift = std::max(drift, std::abs(w - 1.0));
    const bool keep = options.samples == 1 ? seen + 1 == checkpoints : options.samples >= 2 && seen % stride == 0;
    ++seen;
    if (keep) {
      const double L = s.eval(t);
      traj.samples.push_back({t, L, mode_frequency(n, k, L), f, fd, w});
    }
  };

  const double max_dt = options.period_fraction * 2.0 * std::numbers::pi / std::max(w_in, w_out);
  auto stepper = odeint::make_controlled(options.atol, options.rtol, max_dt,
                                         odeint::runge_kutta_fehlberg78<State>());
  const double dt0 = std::min(max_dt, 2.0 * T / static_cast<double>(checkpoints - 1)) * 0.1;
  try {
    odeint::integrate_times(stepper, rhs, x, times.begin(), times.end(), dt0, observer,
                            odeint::max_step_checker(1000000));
  } catch (const odeint::odeint_error& e) {
    throw IntegrationError(std::string("mode integration failed ") + describe(n, k, T) + ": " + e.what(), last_t);
  }
  for (double v : x)
    if (!std::isfinite(v)) throw IntegrationError("mode integration diverged " + describe(n, k, T), last_t);

  BogoliubovResult& r = out.result;
  r.omega_in = w_in;
  r.omega_out = w_out;
  r.wronskian_drift = drift;
  if (drift > options.wronskian_tolerance)
    throw IntegrationError("Wronskian drift " + std::to_string(drift) + " exceeds tolerance " + describe(n, k, T), T);

  const std::complex<double> f(x[0], x[1]);
  const std::complex<double> fd(x[2], x[3]);
  const std::complex<double> u = std::exp(-I * w_out * T) / std::sqrt(2.0 * w_out);
  const std::complex<double> ud = -I * w_out * u;
  r.alpha = kg_product(u, ud, f, fd);
  r.beta = -kg_product(std::conj(u), std::conj(ud), f, fd);
  r.particle_number = std::norm(r.beta);
  r.energy_final = w_out * (r.particle_number + 0.5);
  r.norm_defect = std::abs(std::norm(r.alpha) - r.particle_number - 1.0);
  return out;
}

double sudden_beta(double omega_in, double omega_out) {
  return std::abs(omega_in - omega_out) / (2.0 * std::sqrt(omega_in * omega_out));
}

ScanReport adiabatic_scan(double L0, double L1, const std::vector<double>& T_list, int n, double k,
                          const ScanOptions& options) {
  if (T_list.size() < 3) throw InputError("adiabatic scan needs at least 3 values of T");
  for (std::size_t i = 1; i < T_list.size(); ++i)
    if (!(T_list[i] > T_list[i - 1])) throw InputError("adiabatic scan T list must be strictly increasing");

  ScanReport rep;
  rep.n = n;
  rep.k = k;
  EvolutionOptions ev = options.evolution;
  ev.samples = 0;
  auto run = [&, ev](double T) { return evolve_mode(Schedule{L0, L1, T}, n, k, ev).result; };

  std::vector<BogoliubovResult> results;
  if (options.parallel) {
    std::vector<std::future<BogoliubovResult>> jobs;
    for (double T : T_list) jobs.push_back(std::async(std::launch::async, run, T));
    for (auto& j : jobs) results.push_back(j.get());
  } else {
    for (double T : T_list) results.push_back(run(T));
  }
  for (std::size_t i = 0; i < T_list.size(); ++i) rep.rows.push_back({T_list[i], results[i]});

  const double floor = options.noise_floor;
  for (std::size_t i = 1; i < rep.rows.size(); ++i) {
    const double a = rep.rows[i - 1].result.particle_number;
    const double b = rep.rows[i].result.particle_number;
    const bool noise = a <= floor && b <= floor;
    if (!noise && !(b < a)) rep.monotone = false;
    rep.decay_exponents.push_back(noise || a <= 0.0 || b <= 0.0
                                      ? std::numeric_limits<double>::quiet_NaN()
                                      : -std::log(b / a) / std::log(rep.rows[i].T / rep.rows[i - 1].T));
  }
  for (const ScanRow& row : rep.rows)
    if (row.result.particle_number < options.particle_threshold) {
      rep.threshold_T = row.T;
      break;
    }
  if (!rep.threshold_T) {
    const double p = rep.decay_exponents.back();
    const ScanRow& last = rep.rows.back();
    if (std::isfinite(p) && p > 0.0)
      rep.extrapolated_threshold_T =
          last.T * std::pow(last.result.particle_number / options.particle_threshold, 1.0 / p);
  }
  return rep;
}

std::vector<EnergyShiftRow> vacuum_energy_shift(const Schedule& s, const std::vector<ModeSpec>& modes,
                                                const EvolutionOptions& options) {
  std::vector<EnergyShiftRow> rows;
  for (const ModeSpec& m : modes) {
    EnergyShiftRow row;
    row.mode = m;
    row.result = evolve_mode(s, m.n, m.k, options).result;
    row.omega_in = row.result.omega_in;
    row.omega_out = row.result.omega_out;
    row.violation = row.result.energy_final - 0.5 * row.omega_out;
    row.zero_point_shift = 0.5 * (row.omega_out - row.omega_in);
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> log_k_grid(double k_min, double k_max, std::size_t count) {
  if (!(k_min > 0.0) || !(k_max >= k_min)) throw InputError("log k grid needs 0 < k_min <= k_max");
  std::vector<double> k{0.0};
  if (count == 1) {
    k.push_back(k_min);
    return k;
  }
  const double ratio = std::log(k_max / k_min);
  for (std::size_t j = 0; j < count; ++j)
    k.push_back(k_min * std::exp(ratio * static_cast<double>(j) / static_cast<double>(count - 1)));
  return k;
}

}  // namespace casimir::adiabatic

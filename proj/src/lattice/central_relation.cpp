#include "casimir/lattice/central_relation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "casimir/error.hpp"
#include "casimir/lattice/generators.hpp"
#include "casimir/lattice/mode_basis.hpp"

namespace casimir::lattice {

double bulk_residual_norm(const LatticeGeometry& geom, const linalg::Matrix& quad, std::size_t window, int axis,
                          double profile_width) {
  const std::size_t m = geom.sites();
  if (quad.rows() != 2 * m) throw PreconditionError("bulk_residual_norm: size mismatch");
  const double scale = std::sqrt(geom.cell_volume());
  std::vector<double> gauss(m), moment(m);
  for (std::size_t s = 0; s < m; ++s) {
    double r2 = 0.0;
    for (int d = 0; d < geom.dims; ++d) r2 += geom.position(s, d) * geom.position(s, d);
    gauss[s] = scale * std::exp(-0.5 * r2 / (profile_width * profile_width));
    moment[s] = gauss[s] * geom.position(s, axis) / profile_width;
  }
  double worst = 0.0;
  for (const auto* profile : {&gauss, &moment})
    for (std::size_t sector = 0; sector < 2; ++sector) {
      std::vector<double> u(2 * m, 0.0);
      std::copy(profile->begin(), profile->end(), u.begin() + static_cast<std::ptrdiff_t>(sector * m));
      const std::vector<double> r = linalg::multiply(quad, u);
      double acc = 0.0;
      for (std::size_t s = 0; s < m; ++s) {
        if (geom.edge_distance(s) < window) continue;
        acc += r[s] * r[s] + r[m + s] * r[m + s];
      }
      worst = std::max(worst, std::sqrt(acc));
    }
  return worst;
}

CentralRelationReport verify_central_relation(const LatticeGeometry& geom, double mass_l0, double mass_l1,
                                              const CentralRelationOptions& options) {
  geom.validate();
  if (geom.boundary != Boundary::open) throw InputError("central relation check needs an open lattice");
  const auto window = static_cast<std::size_t>(std::floor(static_cast<double>(geom.sites_per_dim) * options.window_fraction));
  if (window < 1 || 2 * window >= geom.sites_per_dim)
    throw InputError("lattice of " + std::to_string(geom.sites_per_dim) + " sites too small for bulk window " +
                     std::to_string(window));

  const SymplecticStructure omega(geom.sites());
  const QuadraticObservable h0 = build_hamiltonian(geom, mass_l0);
  const ModeBasis basis0 = build_mode_basis(h0);
  const QuadraticObservable p = build_momentum(geom, options.axis, basis0);

  CentralRelationReport report;
  const double masses[2] = {mass_l0, mass_l1};
  for (std::size_t cfg = 0; cfg < 2; ++cfg) {
    const double mass = masses[cfg];
    const QuadraticObservable h = cfg == 0 ? h0 : build_hamiltonian(geom, mass);
    const ModeBasis basis = cfg == 0 ? basis0 : build_mode_basis(h);
    const QuadraticObservable k = build_boost(geom, options.axis, options.time, mass);
    const QuadraticObservable kp = commutator(k, p, omega);

    CentralRelationRecord& rec = report.records[cfg];
    rec.config = cfg;
    rec.mass = mass;
    rec.spacing = geom.spacing;
    rec.sites_per_dim = geom.sites_per_dim;
    rec.window = window;
    rec.central_charge = vacuum_expectation(h, basis);
    rec.zero_point_sum = basis.zero_point_energy();
    const QuadraticObservable rhs = h.with_scalar(h.scalar() - rec.central_charge);
    rec.scalar_slot = rhs.scalar();
    rec.scalar_discrepancy = std::abs(rec.scalar_slot + rec.zero_point_sum) / rec.zero_point_sum;
    rec.vacuum_commutator = vacuum_expectation(kp, basis);
    const QuadraticObservable residual = kp - rhs;
    rec.bulk_residual = bulk_residual_norm(geom, residual.quad(), window, options.axis, options.profile_width);
    rec.full_residual = linalg::frobenius_norm(residual.quad());
  }
  report.central_charge_difference = report.records[0].central_charge - report.records[1].central_charge;
  return report;
}

double fitted_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw PreconditionError("fitted_log_slope: need >= 2 matching points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceStudy central_relation_sweep(const std::vector<double>& spacings, double physical_size, int dims,
                                        double mass_l0, double mass_l1, const CentralRelationOptions& options) {
  if (spacings.empty()) throw InputError("spacing sweep is empty");
  if (!(physical_size > 0.0)) throw InputError("physical size must be positive");
  ConvergenceStudy study;
  std::array<std::vector<double>, 2> residuals;
  for (double a : spacings) {
    if (!(a > 0.0)) throw InputError("spacings must be positive");
    LatticeGeometry geom;
    geom.dims = dims;
    geom.spacing = a;
    geom.sites_per_dim = static_cast<std::size_t>(std::lround(physical_size / a));
    geom.boundary = Boundary::open;
    CentralRelationReport rep = verify_central_relation(geom, mass_l0, mass_l1, options);
    for (const auto& rec : rep.records) {
      study.records.push_back(rec);
      residuals[rec.config].push_back(rec.bulk_residual);
    }
    study.reports.push_back(rep);
  }
  if (spacings.size() >= 2) {
    for (std::size_t cfg = 0; cfg < 2; ++cfg) study.fitted_order[cfg] = fitted_log_slope(spacings, residuals[cfg]);
  }
  return study;
}

ContradictionReport contradiction_demo(const LatticeGeometry& geom, double mass) {
  const QuadraticObservable h = build_hamiltonian(geom, mass);
  const ModeBasis basis = build_mode_basis(h);
  ContradictionReport r;
  r.modes = basis.frequencies.size();
  r.mass = mass;
  r.lowest_frequency = basis.frequencies.front();
  r.zero_point_sum = basis.zero_point_energy();
  r.vacuum_expectation = vacuum_expectation(h, basis);
  r.mode_bound = 0.5 * static_cast<double>(r.modes) * mass;
  r.contradiction = r.mode_bound > 0.0 && r.zero_point_sum >= r.mode_bound * (1.0 - 1e-14);
  return r;
}

PoincareClosure poincare_closure(const LatticeGeometry& geom, double mass) {
  const SymplecticStructure omega(geom.sites());
  const QuadraticObservable h = build_hamiltonian(geom, mass);
  PoincareClosure c;
  std::vector<QuadraticObservable> p;
  for (int axis = 0; axis < geom.dims; ++axis) {
    p.push_back(build_momentum(geom, axis));
    c.h_p[axis] = norm(commutator(h, p.back(), omega));
  }
  if (geom.dims == 2) {
    c.p1_p2 = norm(commutator(p[0], p[1], omega));
    c.j_h = norm(commutator(build_rotation(geom), h, omega));
    c.has_rotation = true;
  }
  return c;
}

}  // namespace casimir::lattice

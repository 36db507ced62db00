#include "casimir/lattice/generators.hpp"

#include <cmath>
#include <string>
#include <tuple>

#include "casimir/error.hpp"

namespace casimir::lattice {

namespace {

// Sparse contribution (row, col, value) to the quadratic matrix of one site's
// energy; symmetric pairs are both listed.
using Terms = std::vector<std::tuple<std::size_t, std::size_t, double>>;

void check_mass(double mass) {
  if (!(mass >= 0.0) || !std::isfinite(mass)) throw InputError("mass must be finite and non-negative");
  if (mass == 0.0) throw DegenerateVacuumError("massless lattice Hamiltonian has a zero-frequency mode");
}

void check_axis(const LatticeGeometry& geom, int axis) {
  if (axis < 0 || axis >= geom.dims)
    throw InputError("axis " + std::to_string(axis) + " out of range for a " + std::to_string(geom.dims) + "-d lattice");
}

// Quadratic terms of a^d h_x for every site x.
std::vector<Terms> site_energy_terms(const LatticeGeometry& geom, double mass) {
  const std::size_t m = geom.sites();
  const double half_bond = 1.0 / (2.0 * geom.spacing * geom.spacing);
  const double m2 = mass * mass;
  std::vector<Terms> terms(m);
  for (std::size_t s = 0; s < m; ++s) {
    terms[s].emplace_back(m + s, m + s, 1.0);
    terms[s].emplace_back(s, s, m2);
  }
  // Bond (u, v) carries 1/2 (phi_v - phi_u)^2 / a^2, split equally between u and v.
  for (std::size_t u = 0; u < m; ++u)
    for (int axis = 0; axis < geom.dims; ++axis) {
      auto v = geom.neighbor(u, axis, +1);
      if (!v) continue;
      for (std::size_t owner : {u, *v}) {
        terms[owner].emplace_back(u, u, half_bond);
        terms[owner].emplace_back(*v, *v, half_bond);
        terms[owner].emplace_back(u, *v, -half_bond);
        terms[owner].emplace_back(*v, u, -half_bond);
      }
    }
  return terms;
}

void accumulate(linalg::Matrix& q, const Terms& t, double weight) {
  for (const auto& [r, c, v] : t) q(r, c) += weight * v;
}

// sum_x pi_x (G phi)_x as a quadratic matrix, G given by (x, y, coefficient).
void add_pi_g_phi(linalg::Matrix& q, std::size_t m, std::size_t x, std::size_t y, double g) {
  q(m + x, y) += g;
  q(y, m + x) += g;
}

void add_central_difference(linalg::Matrix& q, const LatticeGeometry& geom, int axis, std::size_t x, double weight) {
  const std::size_t m = geom.sites();
  const double c = weight / (2.0 * geom.spacing);
  if (auto up = geom.neighbor(x, axis, +1)) add_pi_g_phi(q, m, x, *up, c);
  if (auto dn = geom.neighbor(x, axis, -1)) add_pi_g_phi(q, m, x, *dn, -c);
}

}  // namespace

QuadraticObservable build_hamiltonian(const LatticeGeometry& geom, double mass) {
  geom.validate();
  check_mass(mass);
  const std::size_t n = geom.canonical_dimension();
  linalg::Matrix q(n, n);
  for (const auto& t : site_energy_terms(geom, mass)) accumulate(q, t, 1.0);
  return QuadraticObservable::quadratic(std::move(q));
}

std::vector<QuadraticObservable> local_energy_density(const LatticeGeometry& geom, double mass) {
  geom.validate();
  check_mass(mass);
  const std::size_t n = geom.canonical_dimension();
  const double inv_volume = 1.0 / geom.cell_volume();
  std::vector<QuadraticObservable> out;
  for (const auto& t : site_energy_terms(geom, mass)) {
    linalg::Matrix q(n, n);
    accumulate(q, t, inv_volume);
    out.push_back(QuadraticObservable::quadratic(std::move(q)));
  }
  return out;
}

QuadraticObservable build_momentum(const LatticeGeometry& geom, int axis) {
  geom.validate();
  check_axis(geom, axis);
  const std::size_t n = geom.canonical_dimension();
  linalg::Matrix q(n, n);
  for (std::size_t x = 0; x < geom.sites(); ++x) add_central_difference(q, geom, axis, x, 1.0);
  return QuadraticObservable::quadratic(std::move(q));
}

QuadraticObservable build_momentum(const LatticeGeometry& geom, int axis, const ModeBasis& basis) {
  return normal_ordered(build_momentum(geom, axis), basis);
}

QuadraticObservable build_boost(const LatticeGeometry& geom, int axis, double t, double mass) {
  geom.validate();
  check_axis(geom, axis);
  check_mass(mass);
  if (geom.boundary != Boundary::open) throw InputError("boost generator needs an open lattice");
  const std::size_t n = geom.canonical_dimension();
  linalg::Matrix q(n, n);
  const auto terms = site_energy_terms(geom, mass);
  for (std::size_t x = 0; x < geom.sites(); ++x) accumulate(q, terms[x], -geom.position(x, axis));
  QuadraticObservable k = QuadraticObservable::quadratic(std::move(q));
  if (t != 0.0) k += t * build_momentum(geom, axis);
  return k;
}

QuadraticObservable build_rotation(const LatticeGeometry& geom) {
  geom.validate();
  if (geom.dims != 2) throw InputError("rotation generator needs a 2-d lattice");
  const std::size_t n = geom.canonical_dimension();
  linalg::Matrix q(n, n);
  for (std::size_t x = 0; x < geom.sites(); ++x) {
    // eps_12 x_1 d_2 + eps_21 x_2 d_1
    add_central_difference(q, geom, 1, x, geom.position(x, 0));
    add_central_difference(q, geom, 0, x, -geom.position(x, 1));
  }
  return QuadraticObservable::quadratic(std::move(q));
}

}  // namespace casimir::lattice

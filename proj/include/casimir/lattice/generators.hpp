#pragma once

#include <cstddef>
#include <vector>

#include "casimir/lattice/geometry.hpp"
#include "casimir/lattice/mode_basis.hpp"
#include "casimir/lattice/observable.hpp"

namespace casimir::lattice {

// Lattice field variables absorb the cell volume: phi_x -> a^{d/2} phi_x and
// pi_x -> a^{d/2} pi_x, so [phi_x, pi_y] = i delta_xy exactly.
//
// Derivative stencils:
//   (grad phi)^2       forward difference per bond, each bond shared equally
//                      by its two end sites in the local energy density;
//   d_i phi (P, J)     central difference (phi_{x+e} - phi_{x-e}) / 2a; on open
//                      lattices the missing neighbour is dropped, which keeps
//                      the stencil antisymmetric.

/// H = sum_x a^d h_x with h_x = 1/2 (pi^2 + (grad phi)^2 + m^2 phi^2).
/// Throws DegenerateVacuumError for mass == 0 (the uniform mode is soft) and
/// InputError for mass < 0 or an invalid geometry.
QuadraticObservable build_hamiltonian(const LatticeGeometry& geom, double mass);

/// Energy density h_x per site; sum_x a^d h_x reproduces build_hamiltonian.
/// Memory is dense per site, so this is meant for small lattices.
std::vector<QuadraticObservable> local_energy_density(const LatticeGeometry& geom, double mass);

/// P_i = sum_x a^d pi (d_i phi), Weyl ordered.
QuadraticObservable build_momentum(const LatticeGeometry& geom, int axis);
/// :P_i: with respect to the vacuum of `basis`.
QuadraticObservable build_momentum(const LatticeGeometry& geom, int axis, const ModeBasis& basis);

/// K_i = t P_i - sum_x a^d x_i h_x. Open boundary only (InputError otherwise).
QuadraticObservable build_boost(const LatticeGeometry& geom, int axis, double t, double mass);

/// J = sum_x a^d eps_ij x_i pi (d_j phi), dims = 2 only. On a periodic
/// lattice the centred coordinate jumps across the seam.
QuadraticObservable build_rotation(const LatticeGeometry& geom);

}  // namespace casimir::lattice

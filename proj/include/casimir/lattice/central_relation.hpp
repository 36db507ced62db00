#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "casimir/lattice/geometry.hpp"
#include "casimir/lattice/observable.hpp"

namespace casimir::lattice {

/// Smooth test profiles used to measure a quadratic form in the bulk.
///
/// The matrix entries of two different discretisations of the same
/// differential operator differ at O(1/a^2), so an entrywise norm does not see
/// convergence. Instead the residual is applied to fixed smooth fields
/// (a Gaussian of width `profile_width` and its first moment along `axis`,
/// placed in the phi and in the pi sector), and the discrete L2 norm of the
/// result is taken over sites at least `window` sites from every edge.
double bulk_residual_norm(const LatticeGeometry& geom, const linalg::Matrix& quad, std::size_t window, int axis,
                          double profile_width = 1.0);

struct CentralRelationOptions {
  int axis = 0;
  double window_fraction = 0.25;  // W = floor(N * window_fraction)
  double profile_width = 1.0;
  double time = 0.0;              // t in K = tP - sum x h; drops out of [K, P]
};

/// One row per configuration L. The relation checked is
///
///   (1/i)[K(L), :P:] = H(L) - E(L) + R(L)
///
/// with :P: normal ordered in the L0 vacuum and E(L) = <0|H(L)|0>_L. The
/// constant E(L) is the one fixed by a translation invariant vacuum,
/// <0|[K, P]|0> = 0; `vacuum_commutator` records how far the open lattice
/// vacuum is from that.
struct CentralRelationRecord {
  std::size_t config = 0;  // 0 for L0, 1 for L1
  double mass = 0.0;
  double spacing = 0.0;
  std::size_t sites_per_dim = 0;
  std::size_t window = 0;
  double central_charge = 0.0;      // E(L) from the vacuum covariance trace
  double zero_point_sum = 0.0;      // 1/2 sum_k w_k from the normal-mode frequencies
  double scalar_slot = 0.0;         // constant term of H(L) - E(L)
  double scalar_discrepancy = 0.0;  // |scalar_slot + zero_point_sum| / zero_point_sum
  double vacuum_commutator = 0.0;   // <0|(1/i)[K, P]|0>_L
  double bulk_residual = 0.0;       // bulk_residual_norm of R(L)
  double full_residual = 0.0;       // Frobenius norm of the quadratic part of R(L)
};

struct CentralRelationReport {
  std::array<CentralRelationRecord, 2> records;
  double central_charge_difference = 0.0;  // E(L0) - E(L1)
};

/// Open boundary required. Throws InputError if the bulk window is empty.
CentralRelationReport verify_central_relation(const LatticeGeometry& geom, double mass_l0, double mass_l1,
                                              const CentralRelationOptions& options = {});

struct ConvergenceStudy {
  std::vector<CentralRelationRecord> records;  // ordered by (spacing index, config)
  std::array<double, 2> fitted_order{};        // least-squares slope of log(bulk residual) vs log(a)
  std::vector<CentralRelationReport> reports;
};

/// Runs verify_central_relation for each spacing with N = round(physical_size / a).
ConvergenceStudy central_relation_sweep(const std::vector<double>& spacings, double physical_size, int dims,
                                        double mass_l0, double mass_l1, const CentralRelationOptions& options = {});

/// Least-squares slope of log(y) against log(x).
double fitted_log_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Demanding <0|H|0> = 0 for the unshifted Weyl Hamiltonian would need
/// 1/2 sum w_k = 0, but every w_k >= m > 0.
struct ContradictionReport {
  std::size_t modes = 0;
  double mass = 0.0;
  double lowest_frequency = 0.0;
  double zero_point_sum = 0.0;      // the lower bound of <0|H|0>, exactly 1/2 sum w_k
  double vacuum_expectation = 0.0;  // the same number by the covariance trace
  double mode_bound = 0.0;          // M m / 2
  bool contradiction = false;       // zero_point_sum >= mode_bound > 0
};

ContradictionReport contradiction_demo(const LatticeGeometry& geom, double mass);

/// Frobenius norms of commutators that vanish in the Poincare algebra.
struct PoincareClosure {
  double p1_p2 = 0.0;                  // [P1, P2] (dims = 2 only)
  std::array<double, 2> h_p{};          // [H, P_i]
  double j_h = 0.0;                    // [J, H] (dims = 2 only)
  bool has_rotation = false;
};

PoincareClosure poincare_closure(const LatticeGeometry& geom, double mass);

}  // namespace casimir::lattice

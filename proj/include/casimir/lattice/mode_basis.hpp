#pragma once

#include <vector>

#include "casimir/error.hpp"
#include "casimir/lattice/observable.hpp"
#include "casimir/linalg/matrix.hpp"

namespace casimir::lattice {

/// A zero (or negative) frequency makes the Gaussian vacuum non-normalisable.
class DegenerateVacuumError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Normal modes of H = 1/2 pi^T pi + 1/2 phi^T V phi.
///
/// With V = U diag(w^2) U^T, the symplectic transform is
///   S = diag(U w^{-1/2}, U w^{1/2}),   S^T Q_H S = diag(w, w),
/// and the vacuum covariance is Sigma = 1/2 S S^T.
struct ModeBasis {
  std::vector<double> frequencies;  // ascending, all > 0
  linalg::Matrix transform;
  linalg::Matrix vacuum_covariance;  // Sigma[a][b] = <0| {xi_a, xi_b} / 2 |0>

  double zero_point_energy() const;  // 1/2 sum_k w_k
};

/// Requires a vanishing phi-pi block and an identity kinetic block; throws
/// PreconditionError otherwise and DegenerateVacuumError for a soft mode.
ModeBasis build_mode_basis(const QuadraticObservable& hamiltonian);

/// 1/2 tr(Q Sigma) + scalar; the vacuum has <xi> = 0.
double vacuum_expectation(const QuadraticObservable& o, const ModeBasis& basis);

/// The observable shifted so that its vacuum expectation vanishes.
QuadraticObservable normal_ordered(const QuadraticObservable& o, const ModeBasis& basis);

}  // namespace casimir::lattice

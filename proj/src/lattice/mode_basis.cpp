#include "casimir/lattice/mode_basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace casimir::lattice {

double ModeBasis::zero_point_energy() const {
  double s = 0.0;
  for (double w : frequencies) s += w;
  return 0.5 * s;
}

ModeBasis build_mode_basis(const QuadraticObservable& hamiltonian) {
  const std::size_t m = hamiltonian.modes();
  const linalg::Matrix& q = hamiltonian.quad();
  const double scale = std::max(1.0, linalg::max_abs(q));
  const double tol = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (std::abs(q(i, m + j)) > tol)
        throw PreconditionError("mode basis: Hamiltonian couples phi and pi");
      if (std::abs(q(m + i, m + j) - (i == j ? 1.0 : 0.0)) > tol)
        throw PreconditionError("mode basis: kinetic block is not the identity");
    }

  linalg::Matrix v(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) v(i, j) = q(i, j);
  linalg::SymmetricEigen eig = linalg::symmetric_eigen(v);

  const double floor = 1e3 * std::numeric_limits<double>::epsilon() * std::max(1.0, eig.values.back());
  ModeBasis out;
  out.frequencies.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (!(eig.values[k] > floor))
      throw DegenerateVacuumError("mode basis: zero-frequency mode (omega^2 = " + std::to_string(eig.values[k]) + ")");
    out.frequencies[k] = std::sqrt(eig.values[k]);
  }

  const std::size_t n = 2 * m;
  out.transform = linalg::Matrix(n, n);
  out.vacuum_covariance = linalg::Matrix(n, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const double w = out.frequencies[k];
      out.transform(i, k) = eig.vectors(i, k) / std::sqrt(w);
      out.transform(m + i, m + k) = eig.vectors(i, k) * std::sqrt(w);
    }
  // Sigma_phiphi = 1/2 U w^-1 U^T, Sigma_pipi = 1/2 U w U^T.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      double sp = 0.0, sq = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double uu = eig.vectors(i, k) * eig.vectors(j, k);
        sp += uu / out.frequencies[k];
        sq += uu * out.frequencies[k];
      }
      out.vacuum_covariance(i, j) = out.vacuum_covariance(j, i) = 0.5 * sp;
      out.vacuum_covariance(m + i, m + j) = out.vacuum_covariance(m + j, m + i) = 0.5 * sq;
    }
  return out;
}

double vacuum_expectation(const QuadraticObservable& o, const ModeBasis& basis) {
  return 0.5 * linalg::frobenius_inner(o.quad(), basis.vacuum_covariance) + o.scalar();
}

QuadraticObservable normal_ordered(const QuadraticObservable& o, const ModeBasis& basis) {
  return o.with_scalar(o.scalar() - vacuum_expectation(o, basis));
}

}  // namespace casimir::lattice

#pragma once

#include <cstddef>
#include <vector>

#include "casimir/linalg/matrix.hpp"

namespace casimir::lattice {

/// O = 1/2 xi^T Q xi + l^T xi + s, Weyl (symmetrically) ordered, for the
/// canonical vector xi = (phi_1..phi_M, pi_1..pi_M).
class QuadraticObservable {
 public:
  QuadraticObservable() = default;
  /// Q is symmetrised on construction; sizes must agree (PreconditionError otherwise).
  QuadraticObservable(linalg::Matrix quad, std::vector<double> lin, double scalar);
  static QuadraticObservable zero(std::size_t canonical_dimension);
  /// Pure quadratic form with zero linear part and scalar.
  static QuadraticObservable quadratic(linalg::Matrix quad);

  std::size_t canonical_dimension() const { return lin_.size(); }
  std::size_t modes() const { return lin_.size() / 2; }
  const linalg::Matrix& quad() const { return quad_; }
  const std::vector<double>& lin() const { return lin_; }
  double scalar() const { return scalar_; }

  QuadraticObservable with_scalar(double s) const;

  QuadraticObservable& operator+=(const QuadraticObservable& o);
  QuadraticObservable& operator-=(const QuadraticObservable& o);
  QuadraticObservable& operator*=(double s);

 private:
  linalg::Matrix quad_;
  std::vector<double> lin_;
  double scalar_ = 0.0;
};

QuadraticObservable operator+(QuadraticObservable a, const QuadraticObservable& b);
QuadraticObservable operator-(QuadraticObservable a, const QuadraticObservable& b);
QuadraticObservable operator*(double s, QuadraticObservable a);

/// [xi_a, xi_b] = i omega[a][b] with omega = [[0, I], [-I, 0]].
class SymplecticStructure {
 public:
  explicit SymplecticStructure(std::size_t modes) : modes_(modes) {}

  std::size_t modes() const { return modes_; }
  std::size_t dimension() const { return 2 * modes_; }
  double operator()(std::size_t a, std::size_t b) const;
  linalg::Matrix matrix() const;

  /// A * omega, without forming omega.
  linalg::Matrix right_multiply(const linalg::Matrix& a) const;
  /// omega * v
  std::vector<double> apply(const std::vector<double>& v) const;

 private:
  std::size_t modes_;
};

/// (1/i)[A, B] as a quadratic observable:
///   quad   = Q_A omega Q_B - Q_B omega Q_A
///   lin    = Q_A omega l_B - Q_B omega l_A
///   scalar = l_A^T omega l_B
/// Constant terms of A and B drop out; a Weyl-ordered quadratic-quadratic
/// commutator has no c-number part.
QuadraticObservable commutator(const QuadraticObservable& a, const QuadraticObservable& b,
                               const SymplecticStructure& omega);

/// Frobenius norm over (quad, lin, scalar).
double norm(const QuadraticObservable& o);

}  // namespace casimir::lattice

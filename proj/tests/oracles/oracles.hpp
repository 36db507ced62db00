#pragma once

// Independent reference computations used only by the tests.

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "casimir/lattice/geometry.hpp"
#include "casimir/lattice/observable.hpp"

namespace oracle {

/// Polynomial in canonical pairs (q_j, p_j) with [q_j, p_k] = i delta_jk, stored
/// in standard order (every q to the left of every p). Key: exponents
/// (a_1..a_n, b_1..b_n) of q_1^a_1 .. q_n^a_n p_1^b_1 .. p_n^b_n.
class WeylPolynomial {
 public:
  using Key = std::vector<int>;
  explicit WeylPolynomial(std::size_t pairs) : pairs_(pairs) {}

  static WeylPolynomial constant(std::size_t pairs, std::complex<double> c);
  /// xi_a with xi = (q_1..q_n, p_1..p_n).
  static WeylPolynomial generator(std::size_t pairs, std::size_t a);
  /// 1/2 xi^T Q xi + l^T xi + s as an operator (Q symmetric, so no ordering choice remains).
  static WeylPolynomial from_observable(const casimir::lattice::QuadraticObservable& o);

  WeylPolynomial operator*(const WeylPolynomial& o) const;
  WeylPolynomial operator+(const WeylPolynomial& o) const;
  WeylPolynomial operator-(const WeylPolynomial& o) const;
  WeylPolynomial scaled(std::complex<double> s) const;

  /// Largest coefficient magnitude of this - o.
  double distance(const WeylPolynomial& o) const;
  const std::map<Key, std::complex<double>>& terms() const { return terms_; }

 private:
  std::size_t pairs_;
  std::map<Key, std::complex<double>> terms_;
};

/// (1/i)(AB - BA) computed in the Weyl algebra.
WeylPolynomial weyl_commutator(const casimir::lattice::QuadraticObservable& a,
                               const casimir::lattice::QuadraticObservable& b);

/// <(1/i)[A, B]> in the centred Gaussian state of symmetric covariance sigma,
/// from Wick's theorem with <xi_a xi_b> = sigma_ab + (i/2) omega_ab.
double wick_commutator_expectation(const casimir::lattice::QuadraticObservable& a,
                                   const casimir::lattice::QuadraticObservable& b,
                                   const casimir::linalg::Matrix& sigma);

/// Normal-mode frequencies of m^2 - Laplacian from the closed-form dispersion:
/// periodic 4/a^2 sin^2(pi k / N), open (free ends) 4/a^2 sin^2(pi k / 2N), summed
/// over axes. Ascending.
std::vector<double> analytic_frequencies(const casimir::lattice::LatticeGeometry& geom, double mass);

struct CutoffFit {
  double constant = 0.0;        // Lambda-independent term, compare with -m^3 / (12 pi)
  double linear = 0.0;          // coefficient of Lambda
  double max_fit_residual = 0.0;
};

/// G(Lambda) = (1/4 pi) int_0^inf k [w e^{-w/Lambda} - k e^{-k/Lambda}] dk, w = sqrt(k^2 + m^2),
/// by quadrature on Lambda / m in {10, 20, ..., 640}, then a least-squares fit
/// to {Lambda, 1, 1/Lambda, 1/Lambda^2, 1/Lambda^3}.
CutoffFit cutoff_mode_density(double m);

/// Direct partial sum sum_{n>=1} n^3 e^{-eps n} - 6 / eps^4 in long double.
long double damped_cubic_sum(long double eps);

}  // namespace oracle

#pragma once

#include <complex>
#include <functional>

namespace casimir::energy {

struct QuadratureValue {
  double value = 0.0;
  double error_estimate = 0.0;
};

using ComplexFunction = std::function<std::complex<double>(std::complex<double>)>;

/// Finite part of sum_{n>=0} f(n) in the Abel-Plana formula,
///
///   sum_{n>=0} f(n) - int_0^inf f(x) dx
///     = f(0)/2 + i int_0^inf [f(it) - f(-it)] / (e^{2 pi t} - 1) dt,
///
/// for f analytic in the right half plane and real on the real axis. The
/// integral runs on a tanh-sinh style half-line rule. Throws NumericalError if
/// the integrand has a non-negligible imaginary part.
QuadratureValue abel_plana_remainder(const ComplexFunction& f, double tolerance = 1e-13);

}  // namespace casimir::energy

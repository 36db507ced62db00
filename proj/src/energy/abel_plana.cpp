#include "casimir/energy/abel_plana.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "casimir/error.hpp"

namespace casimir::energy {

QuadratureValue abel_plana_remainder(const ComplexFunction& f, double tolerance) {
  const std::complex<double> i(0.0, 1.0);
  double worst_imag = 0.0;
  auto integrand = [&](double t) {
    if (t == 0.0) return 0.0;
    const std::complex<double> num = i * (f(i * t) - f(-i * t));
    const double denom = std::expm1(2.0 * std::numbers::pi * t);
    if (!std::isfinite(denom)) return 0.0;
    worst_imag = std::max(worst_imag, std::abs(num.imag() / denom));
    return num.real() / denom;
  };
  boost::math::quadrature::exp_sinh<double> rule;
  double error = 0.0;
  double l1 = 0.0;
  const double integral =
      rule.integrate(integrand, 0.0, std::numeric_limits<double>::infinity(), tolerance, &error, &l1);
  const std::complex<double> f0 = f(0.0);
  if (worst_imag > 1e-9 * std::max(1.0, l1))
    throw NumericalError("abel_plana_remainder: integrand is not real; f is not real-analytic");
  QuadratureValue out;
  out.value = 0.5 * f0.real() + integral;
  out.error_estimate = error + 4.0 * std::numeric_limits<double>::epsilon() * (l1 + std::abs(f0.real()));
  return out;
}

}  // namespace casimir::energy

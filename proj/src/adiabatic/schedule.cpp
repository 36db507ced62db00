#include "casimir/adiabatic/schedule.hpp"

#include <cmath>
#include <numbers>

#include "casimir/error.hpp"

namespace casimir::adiabatic {

void Schedule::validate() const {
  auto ok = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!ok(L0) || !ok(L1)) throw InputError("schedule gaps L0 and L1 must be positive");
  if (!ok(T)) throw InputError("schedule half-duration T must be positive");
}

double Schedule::s(double t) const {
  if (t <= -T) return -1.0;
  if (t >= T) return 1.0;
  const double arg = std::numbers::pi * t / (2.0 * T);
  // tanh saturates to +-1 in double long before tan overflows
  if (std::abs(arg) > std::numbers::pi / 2.0 - 1e-300) return t < 0 ? -1.0 : 1.0;
  return std::tanh(std::tan(arg));
}

double Schedule::eval(double t) const {
  if (t <= -T) return L0;
  if (t >= T) return L1;
  const double v = s(t);
  return 0.5 * (1.0 - v) * L0 + 0.5 * (1.0 + v) * L1;
}

}  // namespace casimir::adiabatic

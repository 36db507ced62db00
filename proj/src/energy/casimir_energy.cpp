#include "casimir/energy/casimir_energy.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "casimir/energy/abel_plana.hpp"
#include "casimir/energy/zeta.hpp"
#include "casimir/error.hpp"

namespace casimir::energy {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive_gap(double L) {
  if (!(L > 0.0) || !std::isfinite(L)) throw InputError("plate gap L must be positive and finite");
}

long double pairwise_sum(const std::vector<long double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    long double s = 0.0L;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

// sum_{n>=1} n^3 e^{-eps n} - 6 / eps^4 = zeta(-3) - eps^2 / 504 + O(eps^4)
long double cutoff_cubic_sum(long double eps) {
  const auto n_max = static_cast<std::size_t>(std::ceil(80.0L / eps)) + 16;
  std::vector<long double> terms(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const long double x = static_cast<long double>(n);
    terms[n - 1] = x * x * x * std::exp(-eps * x);
  }
  return pairwise_sum(terms, 0, terms.size()) - 6.0L / (eps * eps * eps * eps);
}

double prefactor(double L) { return -pi * pi / (12.0 * L * L * L); }

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::zeta: return "zeta";
    case Method::abel_plana: return "abel_plana";
    case Method::cutoff_extrapolation: return "cutoff_extrapolation";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::zeta, Method::abel_plana, Method::cutoff_extrapolation})
    if (method_name(m) == name) return m;
  throw InputError("unknown method '" + std::string(name) + "'");
}

double mode_mass(int n, double L) {
  if (n < 1) throw InputError("mode index n must be >= 1");
  require_positive_gap(L);
  return n * pi / L;
}

double mode_energy_density(double m) {
  if (!(m > 0.0)) throw InputError("mode mass must be positive");
  return -m * m * m / (12.0 * pi);
}

double zeta_minus_three() { return zeta_at_negative_integer(3).convert_to<double>(); }

RegularizedSum casimir_energy_per_area(double L, Method method) {
  require_positive_gap(L);
  const double c = prefactor(L);
  RegularizedSum out;
  out.method = method;
  switch (method) {
    case Method::zeta: {
      out.value = c * zeta_minus_three();
      out.error_estimate = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
      break;
    }
    case Method::abel_plana: {
      const QuadratureValue r = abel_plana_remainder([](std::complex<double> z) { return z * z * z; });
      out.value = c * r.value;
      out.error_estimate = std::abs(c) * r.error_estimate;
      break;
    }
    case Method::cutoff_extrapolation: {
      // Lambda in {20, 40, 80} / L, eps = pi / (Lambda L)
      std::vector<long double> level;
      for (double lambda_l : {20.0, 40.0, 80.0}) {
        out.cutoffs.push_back(lambda_l / L);
        level.push_back(cutoff_cubic_sum(static_cast<long double>(pi / lambda_l)));
      }
      // Richardson in eps^2: halving eps scales the eps^{2j} term by 4^{-j}
      long double scale = 4.0L;
      long double last_change = 0.0L;
      while (level.size() > 1) {
        std::vector<long double> next;
        for (std::size_t i = 0; i + 1 < level.size(); ++i)
          next.push_back((scale * level[i + 1] - level[i]) / (scale - 1.0L));
        last_change = next.back() - level.back();
        level = std::move(next);
        scale *= 4.0L;
        ++out.extrapolation_order;
      }
      out.value = c * static_cast<double>(level.front());
      out.error_estimate = std::abs(c) * static_cast<double>(std::abs(last_change)) +
                           4.0 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
      break;
    }
  }
  return out;
}

ForcePerArea casimir_force_per_area(double L) {
  require_positive_gap(L);
  ForcePerArea f;
  f.analytic = -pi * pi / (480.0 * L * L * L * L);
  const double h = L * 1e-4;
  const double ep = casimir_energy_per_area(L + h).value;
  const double em = casimir_energy_per_area(L - h).value;
  f.finite_difference = -(ep - em) / (2.0 * h);
  f.relative_difference = std::abs(f.finite_difference - f.analytic) / std::abs(f.analytic);
  return f;
}

double central_charge_difference(double L0, double L1, std::optional<int> single_mode, Method method) {
  require_positive_gap(L0);
  require_positive_gap(L1);
  if (single_mode)
    return mode_energy_density(mode_mass(*single_mode, L0)) - mode_energy_density(mode_mass(*single_mode, L1));
  return casimir_energy_per_area(L0, method).value - casimir_energy_per_area(L1, method).value;
}

}  // namespace casimir::energy

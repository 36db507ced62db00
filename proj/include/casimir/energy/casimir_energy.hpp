#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace casimir::energy {

/// Dirichlet scalar between two plates with gap L, so m_n = n pi / L.
/// Natural units; energies per unit plate area.

enum class Method { zeta, abel_plana, cutoff_extrapolation };

std::string_view method_name(Method m);
/// Throws InputError for an unknown name.
Method parse_method(std::string_view name);

struct RegularizedSum {
  double value = 0.0;
  Method method = Method::zeta;
  std::vector<double> cutoffs;  // Lambda values used (cutoff route only)
  int extrapolation_order = 0;  // Richardson levels applied (cutoff route only)
  double error_estimate = 0.0;
};

/// n pi / L. Throws InputError unless n >= 1 and L > 0.
double mode_mass(int n, double L);

/// Regularised int d^2k / (2 pi)^2 (1/2) sqrt(k^2 + m^2) = -m^3 / (12 pi).
/// Throws InputError for m <= 0.
double mode_energy_density(double m);

/// sum_{n>=1} n^3 regularised: zeta(-3), as a double.
double zeta_minus_three();

/// -(pi^2 / 12 L^3) times the regularised sum_n n^3, by the chosen route.
/// Throws InputError for L <= 0.
RegularizedSum casimir_energy_per_area(double L, Method method = Method::zeta);

struct ForcePerArea {
  double analytic = 0.0;           // -dE/dL from the closed form
  double finite_difference = 0.0;  // central difference with step L * 1e-4
  double relative_difference = 0.0;
};

ForcePerArea casimir_force_per_area(double L);

/// E(L0) - E(L1) per unit area. With `single_mode` set to n, only the n-th
/// transverse tower contributes: mode_energy_density(m_n(L0)) - mode_energy_density(m_n(L1)).
double central_charge_difference(double L0, double L1, std::optional<int> single_mode = std::nullopt,
                                 Method method = Method::zeta);

}  // namespace casimir::energy

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "casimir/adiabatic/evolution.hpp"
#include "casimir/algebra/catalog.hpp"
#include "casimir/algebra/cocycle.hpp"
#include "casimir/energy/casimir_energy.hpp"
#include "casimir/lattice/central_relation.hpp"
#include "casimir/lattice/generators.hpp"
#include "casimir/lattice/mode_basis.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < budget_seconds;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s [%d] %s: %s; %.2fs of %.0fs%s\n", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs,
              budget_seconds, in_time ? "" : " (over budget)");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

algebra::Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-1000, 1000);
  std::uniform_int_distribution<int> den(1, 97);
  return algebra::make_rational(num(rng), den(rng));
}

lattice::QuadraticObservable random_observable(std::mt19937_64& rng, std::size_t modes) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 2 * modes;
  linalg::Matrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) q(i, j) = q(j, i) = u(rng);
  std::vector<double> l(n);
  for (auto& x : l) x = u(rng);
  return lattice::QuadraticObservable(q, l, u(rng));
}

double oracle_zero_point(const lattice::LatticeGeometry& g, double mass) {
  double s = 0.0;
  for (double w : oracle::analytic_frequencies(g, mass)) s += w;
  return 0.5 * s;
}

}  // namespace

int main() {
  criterion(1, "Poincare charges eliminated by constant shifts", 1.0, [] {
    const algebra::LieAlgebraSpec g = algebra::poincare_2plus1();
    std::mt19937_64 rng(1);
    int exact = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
      const auto c0 = random_rational(rng), c1 = random_rational(rng), c2 = random_rational(rng);
      const algebra::TwoCocycle c = algebra::poincare_charges(g, c0, c1, c2);
      if (algebra::cocycle_check(g, c) != 0) continue;
      const auto r = algebra::coboundary_solve(g, c);
      if (r.feasible() && algebra::coboundary(g, r.certificate->alpha) == c) ++exact;
    }
    return Outcome{exact == trials, std::to_string(exact) + "/" + std::to_string(trials) +
                                        " triples with zero residual and an exact certificate"};
  });

  criterion(2, "nontrivial extension detected", 1.0, [] {
    const algebra::LieAlgebraSpec g = algebra::abelian(2);
    algebra::TwoCocycle c(2);
    c.set(g.index_of("X1"), g.index_of("X2"), 1);
    const bool infeasible = !algebra::coboundary_solve(g, c).feasible();
    const std::size_t h2 = algebra::h2_dimension(g);
    return Outcome{infeasible && h2 == 1, std::string(infeasible ? "infeasible" : "feasible") +
                                              ", dim H^2 = " + std::to_string(h2)};
  });

  criterion(3, "central relation on open lattices", 60.0, [] {
    const double tol_scalar = 1e-9, min_order = 1.9;
    const std::vector<double> spacings{0.2, 0.1, 0.05};
    const lattice::ConvergenceStudy s = lattice::central_relation_sweep(spacings, 8.0, 1, pi, pi / 2);
    double worst = 0.0;
    for (const auto& r : s.records) {
      lattice::LatticeGeometry g;
      g.dims = 1;
      g.sites_per_dim = r.sites_per_dim;
      g.spacing = r.spacing;
      g.boundary = lattice::Boundary::open;
      const double e = oracle_zero_point(g, r.mass);
      worst = std::max(worst, std::abs(r.scalar_slot + e) / e);
    }
    const double order = std::min(s.fitted_order[0], s.fitted_order[1]);
    return Outcome{worst <= tol_scalar && order >= min_order,
                   fmt("scalar slot vs -1/2 sum w %.2e (tol %.0e), fitted order %.3f (min %.1f)", worst, tol_scalar,
                       order, min_order)};
  });

  criterion(4, "normal ordering shifts only the scalar slot", 10.0, [] {
    const double tol = 1e-10;
    std::mt19937_64 rng(4);
    double worst_scalar = 0.0, worst_other = 0.0;
    for (int t = 0; t < 50; ++t) {
      const std::size_t modes = 2 + t % 5;
      lattice::LatticeGeometry g;
      g.sites_per_dim = modes + 1;
      g.spacing = 0.5 + 0.01 * t;
      g.boundary = t % 2 ? lattice::Boundary::open : lattice::Boundary::periodic;
      const lattice::ModeBasis b = lattice::build_mode_basis(lattice::build_hamiltonian(g, 0.5 + 0.05 * t));
      const lattice::SymplecticStructure omega(g.sites());
      const auto a = random_observable(rng, g.sites());
      const auto c = random_observable(rng, g.sites());
      const auto lhs = lattice::commutator(lattice::normal_ordered(a, b), lattice::normal_ordered(c, b), omega);
      const auto rhs = lattice::normal_ordered(lattice::commutator(a, c, omega), b);
      const double expect = oracle::wick_commutator_expectation(a, c, b.vacuum_covariance);
      worst_scalar = std::max(worst_scalar, std::abs(lhs.scalar() - rhs.scalar() - expect) / std::max(1.0, std::abs(expect)));
      worst_other = std::max(worst_other, linalg::max_abs_difference(lhs.quad(), rhs.quad()));
      for (std::size_t i = 0; i < lhs.lin().size(); ++i)
        worst_other = std::max(worst_other, std::abs(lhs.lin()[i] - rhs.lin()[i]));
    }
    return Outcome{worst_scalar <= tol && worst_other == 0.0,
                   fmt("50 pairs: scalar shift vs Wick expectation %.2e (tol %.0e), other slots differ by %.1e",
                       worst_scalar, tol, worst_other)};
  });

  criterion(5, "vacuum energy lower bound", 1.0, [] {
    const double tol = 1e-12;
    lattice::LatticeGeometry g;
    g.sites_per_dim = 16;
    g.spacing = 0.5;
    g.boundary = lattice::Boundary::open;
    const double mass = 1.0;
    const lattice::ContradictionReport r = lattice::contradiction_demo(g, mass);
    const double e = oracle_zero_point(g, mass);
    const double rel = std::abs(r.zero_point_sum - e) / e;
    const bool bound = r.zero_point_sum >= 0.5 * static_cast<double>(r.modes) * mass && r.mode_bound > 0.0;
    return Outcome{rel <= tol && bound && r.contradiction,
                   fmt("bound %.10f vs 1/2 sum w rel %.1e (tol %.0e), M m / 2 = %.1f", r.zero_point_sum, rel, tol,
                       r.mode_bound)};
  });

  criterion(6, "Casimir energy by two routes", 10.0, [] {
    const double tol_zeta = 1e-14, tol_ap = 1e-8, tol_density = 1e-6;
    double worst_zeta = 0.0, worst_ap = 0.0;
    for (double L : {0.5, 1.0, 2.0}) {
      const double analytic = -pi * pi / (1440.0 * L * L * L);
      const double z = energy::casimir_energy_per_area(L, energy::Method::zeta).value;
      const double ap = energy::casimir_energy_per_area(L, energy::Method::abel_plana).value;
      worst_zeta = std::max(worst_zeta, std::abs(z / analytic - 1.0));
      worst_ap = std::max(worst_ap, std::abs(ap / z - 1.0));
    }
    const oracle::CutoffFit fit = oracle::cutoff_mode_density(1.0);
    const double dens = std::abs(fit.constant / energy::mode_energy_density(1.0) - 1.0);
    return Outcome{worst_zeta <= tol_zeta && worst_ap <= tol_ap && dens <= tol_density,
                   fmt("zeta vs closed form %.1e, Abel-Plana vs zeta %.1e (tol %.0e), density vs cutoff oracle %.1e",
                       worst_zeta, worst_ap, tol_ap, dens)};
  });

  criterion(7, "central-charge difference", 1.0, [] {
    const double tol = 1e-10;
    const double analytic = -pi * pi / 1440.0 * (1.0 - 1.0 / 8.0);
    const double d = energy::central_charge_difference(1.0, 2.0);
    const double rel = std::abs(d / analytic - 1.0);
    const bool antisym = d == -energy::central_charge_difference(2.0, 1.0);
    return Outcome{rel <= tol && antisym,
                   fmt("E(1) - E(2) = %.12e, rel %.1e (tol %.0e)", d, rel, tol) +
                       (antisym ? ", antisymmetric exactly" : ", antisymmetry broken")};
  });

  criterion(8, "adiabatic suppression of particle production", 30.0, [] {
    const double min_exponent = 4.0, drift_tol = 1e-8, sudden_tol = 1e-3;
    const adiabatic::ScanReport rep = adiabatic::adiabatic_scan(1.0, 2.0, {2.0, 4.0, 8.0}, 1, 0.0);
    bool strict = true;
    double drift = 0.0;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
      drift = std::max(drift, rep.rows[i].result.wronskian_drift);
      if (i > 0) strict = strict && rep.rows[i].result.particle_number < rep.rows[i - 1].result.particle_number;
    }
    const auto sudden = adiabatic::evolve_mode({1.0, 2.0, 1e-4}, 1, 0.0).result;
    drift = std::max(drift, sudden.wronskian_drift);
    const double closed = adiabatic::sudden_beta(pi, pi / 2);
    const double rel = std::abs(std::abs(sudden.beta) / closed - 1.0);
    const double p = rep.decay_exponents.back();
    return Outcome{strict && p >= min_exponent && drift <= drift_tol && rel <= sudden_tol,
                   std::string(strict ? "strictly decreasing" : "NOT decreasing") +
                       fmt(", exponent %.2f (min %.0f), max drift %.1e, sudden |beta| rel %.1e", p, min_exponent,
                           drift, rel)};
  });

  criterion(9, "Poincare closure on a periodic 16x16 lattice", 30.0, [] {
    const double tol = 1e-10;
    lattice::LatticeGeometry g;
    g.dims = 2;
    g.sites_per_dim = 16;
    g.spacing = 0.5;
    g.boundary = lattice::Boundary::periodic;
    const lattice::PoincareClosure c = lattice::poincare_closure(g, 1.0);
    const double hp = std::max(c.h_p[0], c.h_p[1]);
    const bool pass = c.p1_p2 < tol && hp < tol && c.j_h < tol;
    return Outcome{pass, fmt("[P1,P2] %.1e, [H,P_i] %.1e, [J,H] %.3e (tol %.0e)", c.p1_p2, hp, c.j_h, tol)};
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}

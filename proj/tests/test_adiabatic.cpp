#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "casimir/adiabatic/evolution.hpp"
#include "casimir/adiabatic/schedule.hpp"
#include "casimir/error.hpp"

using namespace casimir;
using namespace casimir::adiabatic;

TEST_CASE("schedule values") {
  const Schedule s{1.0, 2.0, 3.0};
  CHECK(s.eval(0.0) == doctest::Approx(1.5));
  CHECK(s.eval(-3.0) == 1.0);
  CHECK(s.eval(3.0) == 2.0);
  CHECK(s.eval(-100.0) == 1.0);
  CHECK(s.eval(100.0) == 2.0);
  CHECK(s.s(1.5) == doctest::Approx(std::tanh(1.0)).epsilon(1e-15));
  CHECK(s.eval(1.5) == doctest::Approx(1.5 + 0.5 * std::tanh(1.0)).epsilon(1e-15));
  CHECK(s.eval(2.9999999999) == doctest::Approx(2.0).epsilon(1e-15));
  double prev = s.eval(-3.0);
  for (double t = -3.0; t <= 3.0; t += 0.01) {
    const double v = s.eval(t);
    CHECK(v >= prev);
    CHECK(std::isfinite(v));
    prev = v;
  }
  const Schedule r = s.reversed();
  CHECK(r.eval(-0.7) == doctest::Approx(s.eval(0.7)).epsilon(1e-15));
  CHECK_THROWS_AS((Schedule{0.0, 1.0, 1.0}.validate()), InputError);
  CHECK_THROWS_AS((Schedule{1.0, 1.0, -1.0}.validate()), InputError);
}

TEST_CASE("static schedule gives the identity transformation") {
  const auto e = evolve_mode({1.0, 1.0, 2.0}, 1, 0.5);
  CHECK(std::abs(e.result.beta) < 1e-10);
  CHECK(std::abs(e.result.alpha - 1.0) < 1e-10);
  CHECK(e.result.energy_final == doctest::Approx(0.5 * e.result.omega_out).epsilon(1e-12));
}

TEST_CASE("evolution preconditions") {
  const Schedule s{1.0, 2.0, 1.0};
  CHECK_THROWS_AS(evolve_mode(s, 0, 0.0), InputError);
  CHECK_THROWS_AS(evolve_mode(s, 1, -1.0), InputError);
  EvolutionOptions loose;
  loose.rtol = 1e-8;
  CHECK_THROWS_AS(evolve_mode(s, 1, 0.0, loose), InputError);
}

TEST_CASE("Wronskian drift beyond tolerance is an integration error") {
  EvolutionOptions strict;
  strict.wronskian_tolerance = 1e-30;
  try {
    evolve_mode({1.0, 2.0, 4.0}, 3, 2.0, strict);
    FAIL("expected an integration error");
  } catch (const IntegrationError& e) {
    CHECK(std::string(e.what()).find("n=3") != std::string::npos);
    CHECK(e.time() == 4.0);
  }
}

TEST_CASE("sudden limit") {
  const double w_in = std::numbers::pi, w_out = std::numbers::pi / 2;
  CHECK(sudden_beta(w_in, w_out) == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-15));
  const auto r = evolve_mode({1.0, 2.0, 1e-4}, 1, 0.0).result;
  CHECK(std::abs(std::abs(r.beta) / sudden_beta(w_in, w_out) - 1.0) < 1e-3);
}

TEST_CASE("sudden-limit deviation shrinks with T") {
  const double closed = sudden_beta(std::numbers::pi, std::numbers::pi / 2);
  double prev = INFINITY;
  for (double T : {1e-1, 3e-2, 1e-2}) {
    const double dev = std::abs(std::abs(evolve_mode({1.0, 2.0, T}, 1, 0.0).result.beta) - closed);
    CHECK(dev < prev);
    prev = dev;
  }
  const double d1 = std::abs(std::abs(evolve_mode({1.0, 2.0, 2e-2}, 1, 0.0).result.beta) - closed);
  const double d2 = std::abs(std::abs(evolve_mode({1.0, 2.0, 1e-2}, 1, 0.0).result.beta) - closed);
  CHECK(std::log2(d1 / d2) >= 1.0);
}

TEST_CASE("property: Bogoliubov normalisation, Wronskian and time reversal") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> nd(1, 3);
  std::uniform_real_distribution<double> kd(0.0, 5.0), td(0.1, 20.0), ld(0.5, 3.0);
  for (int t = 0; t < 12; ++t) {
    const Schedule s{ld(rng), ld(rng), td(rng)};
    const int n = nd(rng);
    const double k = kd(rng);
    const auto fw = evolve_mode(s, n, k).result;
    CHECK(fw.wronskian_drift <= 1e-8);
    CHECK(fw.norm_defect <= 1e-8);
    const auto bw = evolve_mode(s.reversed(), n, k).result;
    CHECK(std::abs(std::abs(fw.beta) - std::abs(bw.beta)) <= 1e-8);
  }
}

TEST_CASE("trajectory samples") {
  EvolutionOptions o;
  o.samples = 11;
  const auto e = evolve_mode({1.0, 2.0, 2.0}, 1, 0.0, o);
  REQUIRE(e.trajectory.samples.size() == 11);
  CHECK(e.trajectory.samples.front().t == -2.0);
  CHECK(e.trajectory.samples.back().t == 2.0);
  CHECK(e.trajectory.samples.front().L == 1.0);
  CHECK(e.trajectory.samples.back().L == 2.0);
  for (const auto& s : e.trajectory.samples) CHECK(std::abs(s.wronskian - 1.0) < 1e-10);
  const auto& first = e.trajectory.samples.front();
  CHECK(std::abs(first.fdot + std::complex<double>(0.0, 1.0) * first.omega * first.f) < 1e-14);
}

TEST_CASE("adiabatic scan decay") {
  const ScanReport rep = adiabatic_scan(1.0, 2.0, {2.0, 4.0, 8.0}, 1, 0.0);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.monotone);
  CHECK(rep.decay_exponents.back() >= 4.0);
  REQUIRE(rep.threshold_T.has_value());
  CHECK(*rep.threshold_T == 8.0);
  CHECK(rep.rows.back().result.energy_final ==
        doctest::Approx(0.5 * rep.rows.back().result.omega_out).epsilon(1e-6));

  const ScanReport flat = adiabatic_scan(1.0, 1.0, {1.0, 2.0, 3.0}, 1, 0.0);
  CHECK(flat.monotone);
  for (const auto& row : flat.rows) CHECK(row.result.particle_number < 1e-20);

  ScanOptions serial;
  serial.parallel = false;
  const ScanReport again = adiabatic_scan(1.0, 2.0, {2.0, 4.0, 8.0}, 1, 0.0, serial);
  for (std::size_t i = 0; i < 3; ++i) CHECK(again.rows[i].result.beta == rep.rows[i].result.beta);

  CHECK_THROWS_AS(adiabatic_scan(1.0, 2.0, {2.0, 4.0}, 1, 0.0), InputError);
  CHECK_THROWS_AS(adiabatic_scan(1.0, 2.0, {2.0, 8.0, 4.0}, 1, 0.0), InputError);
}

TEST_CASE("non-monotone tails are flagged") {
  const ScanReport rep = adiabatic_scan(1.0, 2.0, {0.6, 0.9, 1.2, 1.5, 1.8, 2.1}, 1, 0.0);
  CHECK(rep.rows[3].result.particle_number > rep.rows[2].result.particle_number);
  CHECK_FALSE(rep.monotone);
  CHECK_FALSE(rep.threshold_T.has_value());
  REQUIRE(rep.extrapolated_threshold_T.has_value());
  CHECK(*rep.extrapolated_threshold_T > 2.1);
}

TEST_CASE("vacuum energy shift") {
  const auto rows = vacuum_energy_shift({1.0, 2.0, 8.0}, {{1, 0.0}, {2, 1.0}});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].zero_point_shift == doctest::Approx(-std::numbers::pi / 4).epsilon(1e-14));
  CHECK(rows[0].violation < 1e-6 * rows[0].omega_out);
  CHECK(rows[0].violation == doctest::Approx(rows[0].omega_out * rows[0].result.particle_number));
  const auto same = vacuum_energy_shift({1.5, 1.5, 2.0}, {{1, 0.3}});
  CHECK(std::abs(same[0].zero_point_shift) == 0.0);
  CHECK(std::abs(same[0].violation) < 1e-12);
}

TEST_CASE("k grid") {
  const auto k = log_k_grid(0.1, 10.0, 3);
  REQUIRE(k.size() == 4);
  CHECK(k[0] == 0.0);
  CHECK(k[1] == doctest::Approx(0.1));
  CHECK(k[2] == doctest::Approx(1.0));
  CHECK(k[3] == doctest::Approx(10.0));
  CHECK_THROWS_AS(log_k_grid(0.0, 1.0, 3), InputError);
}

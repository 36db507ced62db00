#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/algebra/algebra_io.hpp"
#include "casimir/algebra/catalog.hpp"
#include "casimir/algebra/cocycle.hpp"
#include "casimir/error.hpp"
#include "commands.hpp"

namespace casimir::cli {

using algebra::LieAlgebraSpec;
using algebra::Rational;
using algebra::TwoCocycle;
using nlohmann::ordered_json;

void add_cocycle_options(CLI::App& sub, CocycleArgs& a) {
  auto* builtin = sub.add_option("--builtin", a.builtin, "poincare21, galilei11, abelianN or heisenbergN");
  auto* file = sub.add_option("--file", a.file, "Algebra text file (basis/bracket/central lines)");
  builtin->excludes(file);
  sub.add_option("--labels", a.labels, "Rename the basis, comma separated, in basis order");
  sub.add_option("--charges", a.charges, "Poincare central charges c0,c1,c2 (rationals)");
  sub.add_option("--charges-raw", a.charges_raw, "Central terms as a,b=value;a,b=value");
  sub.add_option("--random-trials", a.random_trials, "Random coboundary round trips to run")->check(CLI::NonNegativeNumber);
  sub.add_option("--seed", a.seed, "Seed for the random trials");
  sub.add_option("--out", a.out, "Output directory");
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

ordered_json cocycle_json(const LieAlgebraSpec& alg, const TwoCocycle& c) {
  ordered_json entries = ordered_json::array();
  for (std::size_t a = 0; a < alg.dimension(); ++a)
    for (std::size_t b = a + 1; b < alg.dimension(); ++b)
      if (c(a, b) != 0) entries.push_back({{"a", alg.label(a)}, {"b", alg.label(b)}, {"value", algebra::to_string(c(a, b))}});
  return entries;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  return algebra::make_rational(num(rng), den(rng));
}

}  // namespace

int run_cocycle(const CocycleArgs& args) {
  if (args.builtin.empty() == args.file.empty()) throw InputError("give exactly one of --builtin or --file");
  LieAlgebraSpec alg;
  std::optional<TwoCocycle> cocycle;
  if (!args.builtin.empty()) {
    alg = algebra::builtin_algebra(args.builtin);
  } else {
    algebra::AlgebraDocument doc = algebra::read_algebra_file(args.file);
    alg = std::move(doc.algebra);
    cocycle = std::move(doc.cocycle);
  }
  if (!args.labels.empty()) {
    const auto labels = split(args.labels, ',');
    if (labels.size() != alg.dimension())
      throw InputError("--labels gives " + std::to_string(labels.size()) + " names for a " +
                       std::to_string(alg.dimension()) + "-dimensional algebra");
    if (cocycle) throw InputError("--labels cannot be combined with central terms from a file");
    alg = LieAlgebraSpec(labels, alg.structure_constants());
  }
  const bool is_poincare = args.builtin == "poincare21" && args.labels.empty();
  if (!args.charges.empty()) {
    if (!is_poincare) throw InputError("--charges applies to --builtin poincare21 only");
    const auto parts = split(args.charges, ',');
    if (parts.size() != 3) throw InputError("--charges expects c0,c1,c2");
    cocycle = algebra::poincare_charges(alg, algebra::parse_rational(parts[0]), algebra::parse_rational(parts[1]),
                                        algebra::parse_rational(parts[2]));
  }
  if (!args.charges_raw.empty()) {
    if (cocycle) throw InputError("--charges-raw cannot be combined with other central terms");
    cocycle = algebra::parse_central_terms(alg, args.charges_raw);
  }

  int status = ok;
  ordered_json report;
  report["algebra"] = {{"name", args.builtin.empty() ? args.file : args.builtin},
                       {"dimension", alg.dimension()},
                       {"basis", alg.basis_labels()}};
  const Rational jacobi = algebra::jacobi_check(alg);
  report["jacobi_residual"] = algebra::to_string(jacobi);
  std::cout << "algebra " << report["algebra"]["name"].get<std::string>() << ", dimension " << alg.dimension()
            << ", Jacobi residual " << algebra::to_string(jacobi) << '\n';
  if (jacobi != 0) {
    report["verdict"] = "not_a_lie_algebra";
    std::cout << "verdict: structure constants violate the Jacobi identity\n";
    status = input_error;
  } else {
    const std::size_t h2 = algebra::h2_dimension(alg);
    report["h2_dimension"] = h2;
    std::cout << "dim H^2 = " << h2 << '\n';
    if (!cocycle) {
      report["verdict"] = "no_central_terms";
    } else {
      report["central_terms"] = cocycle_json(alg, *cocycle);
      const Rational residual = algebra::cocycle_check(alg, *cocycle);
      report["cocycle_residual"] = algebra::to_string(residual);
      std::cout << "cocycle residual " << algebra::to_string(residual) << '\n';
      if (residual != 0) {
        report["verdict"] = "not_a_cocycle";
        std::cout << "verdict: central terms are not a 2-cocycle\n";
        status = input_error;
      } else {
        const algebra::CoboundaryResult res = algebra::coboundary_solve(alg, *cocycle);
        report["rank_deficit"] = res.rank_deficit;
        report["certificate_kernel_dimension"] = res.kernel_dimension;
        if (res.feasible()) {
          report["verdict"] = "coboundary";
          ordered_json cert = ordered_json::object();
          std::cout << "verdict: coboundary; absorbed by the shifts\n";
          for (std::size_t c = 0; c < alg.dimension(); ++c) {
            cert[alg.label(c)] = algebra::to_string(res.certificate->alpha[c]);
            if (res.certificate->alpha[c] != 0)
              std::cout << "  " << alg.label(c) << " -> " << alg.label(c) << " + ("
                        << algebra::to_string(res.certificate->alpha[c]) << ")\n";
          }
          report["certificate"] = cert;
          if (!(algebra::coboundary(alg, res.certificate->alpha) == *cocycle)) {
            std::cout << "certificate does not reproduce the central terms\n";
            status = numerical_error;
          }
        } else {
          report["verdict"] = "nontrivial";
          std::cout << "verdict: infeasible; the central terms define a nontrivial extension\n";
        }
      }
    }

    if (args.random_trials > 0) {
      std::mt19937_64 rng(args.seed);
      int passed = 0;
      for (int t = 0; t < args.random_trials; ++t) {
        TwoCocycle c;
        if (is_poincare) {
          const Rational c0 = random_rational(rng), c1 = random_rational(rng), c2 = random_rational(rng);
          c = algebra::poincare_charges(alg, c0, c1, c2);
        } else {
          std::vector<Rational> alpha(alg.dimension());
          for (auto& v : alpha) v = random_rational(rng);
          c = algebra::coboundary(alg, alpha);
        }
        if (algebra::cocycle_check(alg, c) != 0) continue;
        const auto res = algebra::coboundary_solve(alg, c);
        if (res.feasible() && algebra::coboundary(alg, res.certificate->alpha) == c) ++passed;
      }
      report["random_trials"] = {{"count", args.random_trials}, {"seed", args.seed}, {"passed", passed}};
      std::cout << "random trials: " << passed << "/" << args.random_trials << " certified (seed " << args.seed << ")\n";
      if (passed != args.random_trials) status = std::max(status, static_cast<int>(numerical_error));
    }
  }

  const std::filesystem::path path = std::filesystem::path(args.out) / "cocycle_report.json";
  std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path.string());
  f << report.dump(2) << '\n';
  return status;
}

}  // namespace casimir::cli

#include "casimir/algebra/cocycle.hpp"

#include <array>
#include <utility>

#include "casimir/algebra/exact_linalg.hpp"
#include "casimir/error.hpp"

namespace casimir::algebra {

void TwoCocycle::set(std::size_t a, std::size_t b, const Rational& value) {
  if (a >= dim_ || b >= dim_) throw PreconditionError("cocycle index out of range");
  if (a == b) {
    if (value != 0) throw PreconditionError("central term C[a][a] must vanish");
    return;
  }
  c_[a * dim_ + b] = value;
  c_[b * dim_ + a] = -value;
}

bool TwoCocycle::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

namespace {

void require_matching(const LieAlgebraSpec& algebra, const TwoCocycle& c) {
  if (c.dimension() != algebra.dimension())
    throw PreconditionError("cocycle dimension " + std::to_string(c.dimension()) + " does not match algebra dimension " +
                            std::to_string(algebra.dimension()));
}

Rational cyclic_sum(const LieAlgebraSpec& alg, const TwoCocycle& c, std::size_t a, std::size_t b, std::size_t e) {
  Rational s = 0;
  for (std::size_t d = 0; d < alg.dimension(); ++d) {
    if (alg.f(d, a, b) != 0) s += alg.f(d, a, b) * c(d, e);
    if (alg.f(d, b, e) != 0) s += alg.f(d, b, e) * c(d, a);
    if (alg.f(d, e, a) != 0) s += alg.f(d, e, a) * c(d, b);
  }
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

// Matrix of the coboundary map on 1-cochains: rows are pairs a < b, columns basis elements.
RationalMatrix coboundary_matrix(const LieAlgebraSpec& alg) {
  const auto ps = pairs(alg.dimension());
  RationalMatrix m(ps.size(), alg.dimension());
  for (std::size_t r = 0; r < ps.size(); ++r)
    for (std::size_t c = 0; c < alg.dimension(); ++c) m(r, c) = alg.f(c, ps[r].first, ps[r].second);
  return m;
}

}  // namespace

Rational cocycle_check(const LieAlgebraSpec& algebra, const TwoCocycle& c) {
  require_matching(algebra, c);
  const std::size_t n = algebra.dimension();
  Rational worst = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t e = b + 1; e < n; ++e) {
        Rational r = abs(cyclic_sum(algebra, c, a, b, e));
        if (r > worst) worst = r;
      }
  return worst;
}

TwoCocycle coboundary(const LieAlgebraSpec& algebra, const std::vector<Rational>& alpha) {
  const std::size_t n = algebra.dimension();
  if (alpha.size() != n) throw PreconditionError("coboundary: alpha size mismatch");
  TwoCocycle out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Rational s = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (algebra.f(c, a, b) != 0) s += algebra.f(c, a, b) * alpha[c];
      out.set(a, b, s);
    }
  return out;
}

CoboundaryResult coboundary_solve(const LieAlgebraSpec& algebra, const TwoCocycle& c) {
  require_matching(algebra, c);
  if (cocycle_check(algebra, c) != 0)
    throw PreconditionError("coboundary_solve: input fails the cocycle condition");
  const auto ps = pairs(algebra.dimension());
  std::vector<Rational> rhs(ps.size());
  for (std::size_t r = 0; r < ps.size(); ++r) rhs[r] = c(ps[r].first, ps[r].second);
  LinearSolve s = solve(coboundary_matrix(algebra), rhs);
  CoboundaryResult out;
  out.rank_deficit = s.augmented_rank - s.rank;
  out.kernel_dimension = algebra.dimension() - s.rank;
  if (s.x) out.certificate = CoboundaryCertificate{std::move(*s.x)};
  return out;
}

std::size_t h2_dimension(const LieAlgebraSpec& algebra) {
  const std::size_t n = algebra.dimension();
  const auto ps = pairs(n);
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t e = b + 1; e < n; ++e) triples.push_back({a, b, e});

  RationalMatrix d2(triples.size(), ps.size());
  for (std::size_t col = 0; col < ps.size(); ++col) {
    TwoCocycle unit(n);
    unit.set(ps[col].first, ps[col].second, 1);
    for (std::size_t row = 0; row < triples.size(); ++row) {
      const auto& t = triples[row];
      d2(row, col) = cyclic_sum(algebra, unit, t[0], t[1], t[2]);
    }
  }
  const std::size_t cocycles = ps.size() - rank(d2);
  const std::size_t coboundaries = rank(coboundary_matrix(algebra));
  return cocycles - coboundaries;
}

TwoCocycle poincare_charges(const LieAlgebraSpec& poincare, const Rational& c0, const Rational& c1,
                            const Rational& c2) {
  const std::size_t H = poincare.index_of("H");
  const std::size_t P[2] = {poincare.index_of("P1"), poincare.index_of("P2")};
  const std::size_t J = poincare.index_of("J");
  const std::size_t K[2] = {poincare.index_of("K1"), poincare.index_of("K2")};
  const Rational c[2] = {c1, c2};
  TwoCocycle out(poincare.dimension());
  for (int i = 0; i < 2; ++i) {
    out.set(K[i], H, -c[i]);
    out.set(K[i], P[i], -c0);
  }
  // eps_12 = +1: C[J][P1] = c2, C[J][P2] = -c1.
  out.set(J, P[0], c2);
  out.set(J, P[1], -c1);
  return out;
}

}  // namespace casimir::algebra

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "casimir/algebra/lie_algebra.hpp"
#include "casimir/algebra/rational.hpp"

namespace casimir::algebra {

/// Central terms of a projective bracket,
/// [[X_a, X_b]] = sum_c f[c][a][b] X_c + C[a][b] * 1.
class TwoCocycle {
 public:
  TwoCocycle() = default;
  explicit TwoCocycle(std::size_t dimension) : dim_(dimension), c_(dimension * dimension) {}

  std::size_t dimension() const { return dim_; }
  const Rational& operator()(std::size_t a, std::size_t b) const { return c_[a * dim_ + b]; }
  /// Sets C[a][b] = value and C[b][a] = -value.
  void set(std::size_t a, std::size_t b, const Rational& value);
  bool is_zero() const;

  friend bool operator==(const TwoCocycle&, const TwoCocycle&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// Constant shifts X_c -> X_c + alpha[c] that absorb a coboundary:
/// C[a][b] = sum_c f[c][a][b] alpha[c].
struct CoboundaryCertificate {
  std::vector<Rational> alpha;
};

struct CoboundaryResult {
  std::optional<CoboundaryCertificate> certificate;  // empty when C is not a coboundary
  std::size_t rank_deficit = 0;      // rank[B | C] - rank[B]; 1 when infeasible
  std::size_t kernel_dimension = 0;  // dim of alpha with zero coboundary (ambiguity of the certificate)
  bool feasible() const { return certificate.has_value(); }
};

/// Maximum |sum_cyc C([[X_a, X_b]], X_c)| over index triples; zero iff C is a 2-cocycle.
/// Throws PreconditionError on a dimension mismatch.
Rational cocycle_check(const LieAlgebraSpec& algebra, const TwoCocycle& c);

/// The coboundary of alpha, C[a][b] = alpha([[X_a, X_b]]).
TwoCocycle coboundary(const LieAlgebraSpec& algebra, const std::vector<Rational>& alpha);

/// Decides whether C is a coboundary and returns a certificate if so.
/// Throws PreconditionError when C is not a cocycle.
CoboundaryResult coboundary_solve(const LieAlgebraSpec& algebra, const TwoCocycle& c);

/// dim Z^2 - dim B^2, by exact ranks of the coboundary maps on 1- and 2-cochains.
std::size_t h2_dimension(const LieAlgebraSpec& algebra);

/// Central charges of the (1+2)-d Poincare algebra parametrised by (c0, c1, c2):
///
///   [[K_i, H  ]] = P_i          - c_i
///   [[K_i, P_j]] = delta_ij H   - delta_ij c0
///   [[J,   P_i]] = -eps_ij P_j  + eps_ij c_j
///
/// The rotation charge is C_{i,12} = -eps_ij C^j with the spatial index raised
/// by g = diag(+1, -1, -1), so C^j = -c_j. Requires the basis returned by
/// poincare_2plus1().
TwoCocycle poincare_charges(const LieAlgebraSpec& poincare, const Rational& c0, const Rational& c1,
                            const Rational& c2);

}  // namespace casimir::algebra

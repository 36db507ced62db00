#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "casimir/algebra/exact_linalg.hpp"
#include "casimir/algebra/rational.hpp"

namespace casimir::algebra {

/// Finite-dimensional real Lie algebra given by structure constants,
/// [[X_a, X_b]] = sum_c f[c][a][b] X_c.
///
/// The bracket stored here is the rescaled [[A, B]] := i[A, B] of Hermitian
/// generators, so every constant is a real rational. Antisymmetry in (a, b)
/// is maintained by every mutator; the Jacobi identity is not assumed and is
/// checked separately by jacobi_check().
class LieAlgebraSpec {
 public:
  LieAlgebraSpec() = default;
  /// Abelian algebra on the given labels. Labels must be unique and non-empty.
  explicit LieAlgebraSpec(std::vector<std::string> basis_labels);
  /// Full tensor in [c][a][b] order, size dim^3. Throws PreconditionError on a
  /// size mismatch or if the tensor is not antisymmetric in (a, b).
  LieAlgebraSpec(std::vector<std::string> basis_labels, std::vector<Rational> structure_constants);

  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Throws InputError for an unknown label.
  std::size_t index_of(const std::string& label) const;

  const Rational& f(std::size_t c, std::size_t a, std::size_t b) const { return f_[flat(c, a, b)]; }

  /// Sets f[c][a][b] = value and f[c][b][a] = -value. Requires a != b unless value is 0.
  void set_structure_constant(std::size_t a, std::size_t b, std::size_t c, const Rational& value);
  void set_structure_constant(const std::string& a, const std::string& b, const std::string& c,
                              const Rational& value);

  /// Coefficients of [[u, v]] for coordinate vectors u, v.
  std::vector<Rational> bracket(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

  const std::vector<Rational>& structure_constants() const { return f_; }

  friend bool operator==(const LieAlgebraSpec&, const LieAlgebraSpec&) = default;

 private:
  std::size_t flat(std::size_t c, std::size_t a, std::size_t b) const {
    const std::size_t n = labels_.size();
    return (c * n + a) * n + b;
  }

  std::vector<std::string> labels_;
  std::vector<Rational> f_;
};

/// Maximum |Jacobi expression| over all (a, b, c, e); zero iff the bracket is a Lie bracket.
Rational jacobi_check(const LieAlgebraSpec& algebra);

/// Structure constants after the change of basis Y_i = sum_j m(j, i) X_j.
/// Throws PreconditionError if m is singular or of the wrong size.
LieAlgebraSpec change_basis(const LieAlgebraSpec& algebra, const RationalMatrix& m);

}  // namespace casimir::algebra

#include "casimir/algebra/lie_algebra.hpp"

#include <set>
#include <utility>

#include "casimir/error.hpp"

namespace casimir::algebra {

namespace {

void validate_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw PreconditionError("empty basis label");
    if (!seen.insert(l).second) throw PreconditionError("duplicate basis label '" + l + "'");
  }
}

}  // namespace

LieAlgebraSpec::LieAlgebraSpec(std::vector<std::string> basis_labels) : labels_(std::move(basis_labels)) {
  validate_labels(labels_);
  const std::size_t n = labels_.size();
  f_.assign(n * n * n, Rational(0));
}

LieAlgebraSpec::LieAlgebraSpec(std::vector<std::string> basis_labels, std::vector<Rational> structure_constants)
    : labels_(std::move(basis_labels)), f_(std::move(structure_constants)) {
  validate_labels(labels_);
  const std::size_t n = labels_.size();
  if (f_.size() != n * n * n) {
    throw PreconditionError("structure constants have " + std::to_string(f_.size()) + " entries, expected " +
                            std::to_string(n * n * n));
  }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b)
        if (f(c, a, b) != -f(c, b, a))
          throw PreconditionError("structure constants are not antisymmetric at [" + labels_[a] + ", " +
                                  labels_[b] + "]");
}

std::size_t LieAlgebraSpec::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw InputError("unknown basis label '" + label + "'");
}

void LieAlgebraSpec::set_structure_constant(std::size_t a, std::size_t b, std::size_t c, const Rational& value) {
  const std::size_t n = dimension();
  if (a >= n || b >= n || c >= n) throw PreconditionError("structure constant index out of range");
  if (a == b) {
    if (value != 0) throw PreconditionError("[[X, X]] must vanish");
    return;
  }
  f_[flat(c, a, b)] = value;
  f_[flat(c, b, a)] = -value;
}

void LieAlgebraSpec::set_structure_constant(const std::string& a, const std::string& b, const std::string& c,
                                            const Rational& value) {
  set_structure_constant(index_of(a), index_of(b), index_of(c), value);
}

std::vector<Rational> LieAlgebraSpec::bracket(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  const std::size_t n = dimension();
  if (u.size() != n || v.size() != n) throw PreconditionError("bracket: coordinate size mismatch");
  std::vector<Rational> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (v[b] == 0) continue;
      const Rational uv = u[a] * v[b];
      for (std::size_t c = 0; c < n; ++c)
        if (f(c, a, b) != 0) out[c] += uv * f(c, a, b);
    }
  }
  return out;
}

Rational jacobi_check(const LieAlgebraSpec& algebra) {
  const std::size_t n = algebra.dimension();
  if (algebra.structure_constants().size() != n * n * n)
    throw PreconditionError("jacobi_check: dimension mismatch");
  Rational worst = 0;
  // The Jacobi expression is totally antisymmetric in (a, b, c).
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e) {
          Rational s = 0;
          for (std::size_t d = 0; d < n; ++d) {
            s += algebra.f(d, a, b) * algebra.f(e, d, c);
            s += algebra.f(d, b, c) * algebra.f(e, d, a);
            s += algebra.f(d, c, a) * algebra.f(e, d, b);
          }
          Rational as = abs(s);
          if (as > worst) worst = as;
        }
  return worst;
}

LieAlgebraSpec change_basis(const LieAlgebraSpec& algebra, const RationalMatrix& m) {
  const std::size_t n = algebra.dimension();
  if (m.rows() != n || m.cols() != n) throw PreconditionError("change_basis: matrix size mismatch");
  auto minv = inverse(m);
  if (!minv) throw PreconditionError("change_basis: singular matrix");
  // [[Y_i, Y_j]] = sum_{a,b} m(a,i) m(b,j) f[c][a][b] X_c, X_c = sum_k minv(k,c) Y_k.
  std::vector<Rational> g(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> xc(n);
      for (std::size_t a = 0; a < n; ++a) {
        if (m(a, i) == 0) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (m(b, j) == 0) continue;
          const Rational w = m(a, i) * m(b, j);
          for (std::size_t c = 0; c < n; ++c)
            if (algebra.f(c, a, b) != 0) xc[c] += w * algebra.f(c, a, b);
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t c = 0; c < n; ++c)
          if (xc[c] != 0) s += (*minv)(k, c) * xc[c];
        g[(k * n + i) * n + j] = s;
      }
    }
  return LieAlgebraSpec(algebra.basis_labels(), std::move(g));
}

}  // namespace casimir::algebra

#include "casimir/algebra/exact_linalg.hpp"

#include <numeric>
#include <utility>

#include "casimir/error.hpp"

namespace casimir::algebra {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw PreconditionError("multiply: inner dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

// In-place forward elimination with full pivoting over the first `ncols`
// columns. Columns beyond `ncols` are carried along (augmented part) but never
// chosen as pivots. Returns the rank; `colperm[k]` is the original column of
// the k-th pivot.
std::size_t eliminate(RationalMatrix& m, std::size_t ncols, std::vector<std::size_t>& colperm) {
  const std::size_t rows = m.rows();
  colperm.resize(ncols);
  std::iota(colperm.begin(), colperm.end(), std::size_t{0});
  std::size_t r = 0;
  for (; r < rows && r < ncols; ++r) {
    // Largest magnitude remaining entry.
    std::size_t pr = rows, pc = ncols;
    Rational best = 0;
    for (std::size_t i = r; i < rows; ++i) {
      for (std::size_t j = r; j < ncols; ++j) {
        const Rational& v = m(i, colperm[j]);
        if (v == 0) continue;
        Rational av = abs(v);
        if (pr == rows || av > best) {
          best = av;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    if (pr != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
    }
    std::swap(colperm[r], colperm[pc]);
    const Rational pivot = m(r, colperm[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Rational& lead = m(i, colperm[r]);
      if (lead == 0) continue;
      const Rational factor = lead / pivot;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
      }
    }
  }
  return r;
}

}  // namespace

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  std::vector<std::size_t> perm;
  return eliminate(m, m.cols(), perm);
}

LinearSolve solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw PreconditionError("solve: right-hand side size mismatch");
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  std::vector<std::size_t> perm;
  LinearSolve out;
  out.rank = eliminate(aug, n, perm);
  out.augmented_rank = out.rank;
  for (std::size_t i = out.rank; i < aug.rows(); ++i) {
    if (aug(i, n) != 0) {
      out.augmented_rank = out.rank + 1;
      return out;
    }
  }
  // Back substitution on the pivot columns; free variables are zero.
  std::vector<Rational> x(n);
  for (std::size_t k = out.rank; k-- > 0;) {
    Rational acc = aug(k, n);
    for (std::size_t j = k + 1; j < out.rank; ++j) acc -= aug(k, perm[j]) * x[perm[j]];
    x[perm[k]] = acc / aug(k, perm[k]);
  }
  out.x = std::move(x);
  return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  RationalMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rational> e(n);
    e[c] = 1;
    LinearSolve s = solve(a, e);
    if (s.rank < n) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = (*s.x)[r];
  }
  return inv;
}

}  // namespace casimir::algebra

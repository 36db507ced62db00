#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "casimir/algebra/rational.hpp"

namespace casimir::algebra {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank by Gaussian elimination with full pivoting.
std::size_t rank(const RationalMatrix& a);

struct LinearSolve {
  std::size_t rank = 0;                      // rank of the coefficient matrix
  std::size_t augmented_rank = 0;            // rank of [A | b]
  std::optional<std::vector<Rational>> x;    // one solution when consistent (free variables = 0)
};

/// Solves A x = b exactly. Inconsistent systems report augmented_rank > rank and no x.
LinearSolve solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Exact inverse, or nullopt when singular. Throws PreconditionError if not square.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

}  // namespace casimir::algebra

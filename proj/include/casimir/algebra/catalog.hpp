#pragma once

#include <cstddef>
#include <string>

#include "casimir/algebra/lie_algebra.hpp"

namespace casimir::algebra {

/// Basis (H, P1, P2, J, K1, K2) with
///   [[P_i, P_j]] = [[P_i, H]] = [[J, H]] = 0,
///   [[J, P_i]] = -eps_ij P_j,   [[J, K_i]] = -eps_ij K_j,
///   [[K_i, K_j]] = eps_ij J,    [[K_i, H]] = P_i,   [[K_i, P_j]] = delta_ij H,
/// eps_12 = 1. The J-K orientation is the one for which the Jacobi identity holds.
LieAlgebraSpec poincare_2plus1();

/// n generators X1..Xn, all brackets zero.
LieAlgebraSpec abelian(std::size_t n);

/// X1..Xn, Y1..Yn, Z with [[X_i, Y_i]] = Z.
LieAlgebraSpec heisenberg(std::size_t n);

/// (H, P, K) with [[K, H]] = P; the mass extension [[K, P]] = M is nontrivial.
LieAlgebraSpec galilei_1plus1();

/// "poincare21", "abelianN", "heisenbergN", "galilei11". Throws InputError otherwise.
LieAlgebraSpec builtin_algebra(const std::string& name);

}  // namespace casimir::algebra

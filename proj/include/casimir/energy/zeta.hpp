#pragma once

#include "casimir/algebra/rational.hpp"

namespace casimir::energy {

/// Bernoulli number B_n with B_1 = -1/2.
algebra::Rational bernoulli(unsigned n);

/// zeta(-n) = (-1)^n B_{n+1} / (n + 1) for n >= 1.
algebra::Rational zeta_at_negative_integer(unsigned n);

}  // namespace casimir::energy

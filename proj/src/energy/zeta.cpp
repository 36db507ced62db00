#include "casimir/energy/zeta.hpp"

#include <vector>

#include "casimir/error.hpp"

namespace casimir::energy {

using algebra::Integer;
using algebra::Rational;

Rational bernoulli(unsigned n) {
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, k)
    for (unsigned k = 0; k < m; ++k) {
      acc += Rational(binom) * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -acc / Rational(binom);
  }
  return b[n];
}

Rational zeta_at_negative_integer(unsigned n) {
  if (n == 0) throw PreconditionError("zeta_at_negative_integer: n must be >= 1");
  Rational v = bernoulli(n + 1) / Rational(n + 1);
  return n % 2 == 0 ? v : Rational(-v);
}

}  // namespace casimir::energy

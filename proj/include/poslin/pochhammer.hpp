#ifndef POSLIN_POCHHAMMER_HPP
#define POSLIN_POCHHAMMER_HPP

#include "poslin/rational.hpp"

namespace poslin {

/// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
inline Rational pochhammer(const Rational& x, unsigned n) {
  Rational result = 1;
  Rational factor = x;
  for (unsigned k = 0; k < n; ++k) {
    result *= factor;
    if (sgn(result) == 0) break;
    factor += 1;
  }
  return result;
}

inline Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

/// Binomial coefficient with rational upper argument: (x-m+1)_m / m!.
inline Rational gen_binomial(const Rational& x, unsigned m) {
  Rational lower = x - m + 1;
  return pochhammer(lower, m) / factorial(m);
}

}  // namespace poslin

#endif  // POSLIN_POCHHAMMER_HPP

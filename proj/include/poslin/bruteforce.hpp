#ifndef POSLIN_BRUTEFORCE_HPP
#define POSLIN_BRUTEFORCE_HPP

// Reference route for linearization coefficients that shares nothing with
// the recursion-based code: monomial expansions from the three-term
// recurrences, an exact product, and conversion back to the orthogonal
// basis by leading-term elimination.

#include "poslin/coeff_vector.hpp"
#include "poslin/gencheb.hpp"
#include "poslin/jacobi.hpp"
#include "poslin/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace poslin {

/// Monomial expansions of P_0 .. P_N for the given family.
inline std::vector<RationalPolynomial> basis_polynomials(const JacobiParams& p, Family family, unsigned N) {
  std::vector<RationalPolynomial> P;
  P.reserve(N + 1);
  P.push_back(RationalPolynomial::constant(1));
  if (N == 0) return P;
  const RationalPolynomial x = RationalPolynomial::monomial(1, 1);

  if (family == Family::gencheb) {
    P.push_back(x);
    for (unsigned k = 1; k < N; ++k) {
      const GenChebCoeffs r = gencheb_rec_coeffs(p, k);
      P.push_back((x * P[k] - r.c_n * P[k - 1]) * Rational(1 / r.a_n));
    }
    return P;
  }

  const JacobiParams q = family == Family::jacobi_plus ? p.plus() : p;
  const RecurrenceCoeffs r0 = jacobi_rec_coeffs(q, 0);
  const RationalPolynomial p1 = (x - RationalPolynomial::constant(r0.b_n)) * Rational(1 / r0.a_n);
  P.push_back(p1);
  for (unsigned k = 1; k < N; ++k) {
    const RecurrenceCoeffs r = jacobi_rec_coeffs(q, k);
    RationalPolynomial next = (p1 - RationalPolynomial::constant(r.b_n)) * P[k] - *r.c_n * P[k - 1];
    P.push_back(next * Rational(1 / r.a_n));
  }
  return P;
}

/// Expands `f` in the basis `P` (deg P[k] = k) by subtracting multiples of
/// P_k from the top degree down. Returns the coefficient of each P_k.
inline std::vector<Rational> to_basis(RationalPolynomial f, const std::vector<RationalPolynomial>& P) {
  if (f.degree() >= static_cast<int>(P.size())) throw std::domain_error("basis too short for polynomial");
  std::vector<Rational> coeffs(P.size());
  for (int d = f.degree(); d >= 0; --d) {
    const Rational c = f.coeff(static_cast<std::size_t>(d)) / P[d].leading();
    coeffs[d] = c;
    if (sgn(c) != 0) f -= P[d] * c;
  }
  if (!f.is_zero()) throw std::logic_error("basis elimination left a remainder");
  return coeffs;
}

inline CoeffVector linearize_bruteforce(const JacobiParams& p, unsigned m, unsigned n, Family family) {
  const auto P = basis_polynomials(p, family, m + n);
  const std::vector<Rational> c = to_basis(P[m] * P[n], P);
  const unsigned lo = m > n ? m - n : n - m;
  for (unsigned k = 0; k < lo; ++k)
    if (sgn(c[k]) != 0) throw std::logic_error("product has a component below |m-n|");
  return CoeffVector(m, n, family, std::vector<Rational>(c.begin() + lo, c.end()));
}

}  // namespace poslin

#endif  // POSLIN_BRUTEFORCE_HPP

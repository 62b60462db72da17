#ifndef POSLIN_HYPERGEOM_HPP
#define POSLIN_HYPERGEOM_HPP

// Closed-form routes to g_R through terminating 9F8 sums at unit argument
// (valid strictly inside Delta) and Dougall's ultraspherical formula.

#include "poslin/coeff_vector.hpp"
#include "poslin/params.hpp"
#include "poslin/pochhammer.hpp"
#include "poslin/rational.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace poslin {

/// sum_{r=0}^{term_count-1} prod (num_i)_r / (prod (den_i)_r r!).
///
/// A very-well-poised leading pair lambda, 1 + lambda/2 over lambda/2 is
/// kept separately as `well_poised` and evaluated in the cancelled form
/// (lambda)_r (lambda + 2r) / lambda, which stays finite at lambda = 0.
struct HypTermSum {
  std::optional<Rational> well_poised;
  std::vector<Rational> numerator_params;
  std::vector<Rational> denominator_params;
  unsigned term_count = 0;

  static Rational well_poised_factor(const Rational& lambda, unsigned r) {
    if (r == 0) return 1;
    return pochhammer(Rational(lambda + 1), r - 1) * (lambda + 2 * r);
  }

  /// Term r, optionally multiplied by `extra(r)`.
  Rational term(unsigned r) const {
    Rational num = 1, den = factorial(r);
    if (well_poised) num *= well_poised_factor(*well_poised, r);
    for (const auto& x : numerator_params) num *= pochhammer(x, r);
    for (const auto& x : denominator_params) den *= pochhammer(x, r);
    if (sgn(den) == 0) throw std::domain_error("boundary limit required: series denominator vanishes");
    return num / den;
  }

  Rational evaluate(const std::function<Rational(unsigned)>& extra = nullptr) const {
    Rational total = 0;
    for (unsigned r = 0; r < term_count; ++r) {
      Rational t = term(r);
      if (extra) t *= extra(r);
      total += t;
    }
    return total;
  }
};

namespace detail {

inline Rational checked_div(const Rational& num, const Rational& den) {
  if (sgn(den) == 0) throw std::domain_error("boundary limit required: vanishing denominator");
  return num / den;
}

/// Common leading factor of the even/odd representations:
/// (a+2s+2j)/a (m+a)_m (alpha+1)_{s+j} (beta+1)_{m+s} (a)_{2s+j} (a)_j (m+s)!
///   / ((alpha+1)_s (alpha+1)_m (beta+1)_{s+j} (a+1)_{2m+2s+j} s! j!)
inline Rational rahman_common(const JacobiParams& p, unsigned m, unsigned s, unsigned j) {
  const Rational& al = p.alpha();
  const Rational& be = p.beta();
  const Rational& a = p.a();
  Rational num = (a + 2 * s + 2 * j) * pochhammer(Rational(m + a), m) * pochhammer(Rational(al + 1), s + j) *
                 pochhammer(Rational(be + 1), m + s) * pochhammer(a, 2 * s + j) * pochhammer(a, j) * factorial(m + s);
  Rational den = a * pochhammer(Rational(al + 1), s) * pochhammer(Rational(al + 1), m) *
                 pochhammer(Rational(be + 1), s + j) * pochhammer(Rational(a + 1), 2 * m + 2 * s + j) * factorial(s) *
                 factorial(j);
  return checked_div(num, den);
}

}  // namespace detail

/// g_R(m, m+s; s+j) by the corrected Rahman 9F8 representations (separate
/// formulas for even and odd j). Defined only strictly inside Delta.
inline Rational rahman_coefficient(const JacobiParams& p, unsigned m, unsigned s, unsigned j) {
  if (m < 1) throw std::domain_error("rahman_coefficient requires m >= 1");
  if (j > 2 * m) throw std::domain_error("rahman_coefficient requires j <= 2m");
  if (sgn(p.a()) <= 0 || sgn(p.b()) <= 0)
    throw std::domain_error("formula undefined without limit; use linearize_jacobi");

  const Rational& al = p.alpha();
  const Rational& be = p.beta();
  const Rational ab = al + be;
  const Rational half = rat(1, 2);
  const Rational M = m, S = s;
  Rational pref = detail::rahman_common(p, m, s, j);
  HypTermSum sum;

  if (j % 2 == 0) {
    const unsigned J = j / 2;
    pref *= detail::checked_div(pochhammer(Rational(-M), J) * pochhammer(Rational(ab + M + S + 1), J),
                                pochhammer(Rational(-M - ab / 2), J) * pochhammer(Rational(al + S + 1), J));
    pref *= detail::checked_div(
        pochhammer(Rational(-M - al), J) * pochhammer(Rational(be + M + S + 1), J) * pochhammer(half, J),
        pochhammer(Rational(half - M - ab / 2), J) * pochhammer(Rational(S + 1), J) * pochhammer(Rational(al + 1), J));
    const Rational JJ = J;
    sum.well_poised = al;
    sum.numerator_params = {al + half,          (al - be) / 2, (al - be + 1) / 2, ab + M + S + 1 + JJ,
                            -M + JJ,            -S - JJ,       -JJ};
    sum.denominator_params = {half,         ab / 2 + 1,      (ab + 1) / 2, -be - M - S - JJ,
                              al + M + 1 - JJ, al + S + 1 + JJ, al + 1 + JJ};
    sum.term_count = J + 1;
  } else {
    const unsigned J1 = (j + 1) / 2, J0 = (j - 1) / 2;
    const Rational jh = rat(j, 2);
    pref *= detail::checked_div(pochhammer(Rational(-M), J1) * pochhammer(Rational(ab + M + S + 1), J1),
                                pochhammer(Rational(-M - ab / 2), J1) * pochhammer(Rational(al + S + 1), J1));
    pref *= detail::checked_div(pochhammer(Rational(-M - al), J0) * pochhammer(Rational(be + M + S + 1), J0) *
                                    pochhammer(Rational(3 * half), J0),
                                pochhammer(Rational(half - M - ab / 2), J0) * pochhammer(Rational(S + 1), J0) *
                                    pochhammer(Rational(al + 2), J0));
    pref *= detail::checked_div(Rational(al - be), Rational(ab + 1));
    sum.well_poised = al + 1;
    sum.numerator_params = {al + half,          (al - be) / 2 + 1,  (al - be + 1) / 2, ab + M + S + 3 * half + jh,
                            -M + half + jh,     half - S - jh,      (1 - Rational(j)) / 2};
    sum.denominator_params = {3 * half,
                              ab / 2 + 1,
                              (ab + 3) / 2,
                              (1 - Rational(j)) / 2 - be - M - S,
                              al + M + 3 * half - jh,
                              al + S + 3 * half + jh,
                              al + 3 * half + jh};
    sum.term_count = J0 + 1;
  }
  return pref * sum.evaluate();
}

/// g_R(m, m+s; s+j) by the single corrected representation valid for
/// alpha >= beta >= -1/2.
///
/// The factor (alpha-beta)_j is merged with the two series denominators
/// ((beta-alpha)/2 + (2-j)/2)_r ((beta-alpha)/2 + (1-j)/2)_r, whose product
/// is 4^-r (alpha-beta+j-2r)_{2r}; the quotient is 4^r (alpha-beta)_{j-2r}.
/// The merged form is polynomial in alpha-beta, so alpha = beta needs no
/// special treatment. a = 0 (alpha = beta = -1/2) is a genuine boundary.
inline Rational rahman_special(const JacobiParams& p, unsigned m, unsigned s, unsigned j) {
  if (m < 1) throw std::domain_error("rahman_special requires m >= 1");
  if (j > 2 * m) throw std::domain_error("rahman_special requires j <= 2m");
  const Rational& al = p.alpha();
  const Rational& be = p.beta();
  if (!(al >= be && be >= rat(-1, 2))) throw std::domain_error("rahman_special requires alpha >= beta >= -1/2");
  if (sgn(p.a()) == 0) throw std::domain_error("boundary limit required at alpha = beta = -1/2");

  const Rational& a = p.a();
  const Rational half = rat(1, 2);
  const Rational M = m, S = s, jh = rat(j, 2);
  const Rational d = al - be;

  Rational pref = (a + 2 * s + 2 * j) / a * factorial(m + s) / (factorial(s) * factorial(j));
  pref *= detail::checked_div(pochhammer(Rational(be + 1), m + s) * pochhammer(a, 2 * m),
                              pochhammer(Rational(al + 1), m) * pochhammer(Rational(be + 1), s) * pochhammer(a, m));
  pref *= detail::checked_div(
      pochhammer(a, 2 * s + j) * pochhammer(Rational(-2 * M), j) * pochhammer(Rational(2 * a + 2 * M + 2 * S), j),
      pochhammer(Rational(a + 1), 2 * m + 2 * s + j) * pochhammer(Rational(-2 * M - a + 1), j));
  pref = detail::checked_div(pref, pochhammer(Rational(2 * be + 2 * S + 2), j));

  HypTermSum sum;
  sum.well_poised = be + S + half;
  sum.numerator_params = {be + half,           be + M + S + 1,        -M - al, a / 2 + S + jh,
                          (a + 1) / 2 + S + jh, (1 - Rational(j)) / 2, -jh};
  sum.denominator_params = {S + 1, -M + half, a + M + S + half, be + S + 1 + jh, be + S + 3 * half + jh};
  sum.term_count = j / 2 + 1;

  Rational four_pow = 1;
  std::vector<Rational> merged(sum.term_count);
  for (unsigned r = 0; r < sum.term_count; ++r) {
    merged[r] = four_pow * pochhammer(d, j - 2 * r);
    four_pow *= 4;
  }
  return pref * sum.evaluate([&](unsigned r) { return merged[r]; });
}

/// Full linearization vector of R_m^(alpha,alpha) R_n^(alpha,alpha) by
/// Dougall's formula, k = m+n-2i, zeros at k with m+n-k odd.
inline CoeffVector dougall_coefficient(const Rational& alpha, unsigned m, unsigned n) {
  if (alpha <= rat(-1, 2)) throw std::domain_error("dougall_coefficient requires alpha > -1/2");
  std::vector<Rational> out(CoeffVector::size_for(m, n));
  const unsigned k_min = m > n ? m - n : n - m;
  const Rational l = alpha + rat(1, 2);
  const Rational two_a1 = 2 * alpha + 1;
  const Rational M = m, N = n;
  for (unsigned i = 0; i <= std::min(m, n); ++i) {
    Rational v = factorial(i) * pochhammer(l, i) * gen_binomial(M, i) * gen_binomial(N, i);
    v *= (M + N + l - 2 * i) * pochhammer(l, m - i) * pochhammer(l, n - i) * pochhammer(two_a1, m + n - i);
    v /= (M + N + l - i) * pochhammer(l, m + n - i) * pochhammer(two_a1, m) * pochhammer(two_a1, n);
    out[m + n - 2 * i - k_min] = std::move(v);
  }
  return CoeffVector(m, n, Family::jacobi, std::move(out));
}

}  // namespace poslin

#endif  // POSLIN_HYPERGEOM_HPP

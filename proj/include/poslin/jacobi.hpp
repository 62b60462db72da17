#ifndef POSLIN_JACOBI_HPP
#define POSLIN_JACOBI_HPP

// Jacobi polynomials R_n^(alpha,beta), normalized by R_n(1) = 1, and the
// linearization coefficients g_R(m, n; k) of their products.

#include "poslin/coeff_vector.hpp"
#include "poslin/params.hpp"
#include "poslin/pochhammer.hpp"
#include "poslin/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace poslin {

/// R_1 R_n = a_n R_{n+1} + b_n R_n + c_n R_{n-1}; for n = 0 the relation
/// reads R_1 = (x - b_0) / a_0 and c_0 is absent.
struct RecurrenceCoeffs {
  unsigned n = 0;
  Rational a_n;
  Rational b_n;
  std::optional<Rational> c_n;
};

namespace detail {

inline RecurrenceCoeffs jacobi_rec_alpha_beta(const Rational& al, const Rational& be, unsigned n) {
  RecurrenceCoeffs r;
  r.n = n;
  if (n == 0) {
    r.a_n = (2 * al + 2) / (al + be + 2);
    r.b_n = -(al - be) / (al + be + 2);
    return r;
  }
  const Rational nn = n;
  const Rational s = al + be;
  r.a_n = (s + 2) * (nn + s + 1) * (nn + al + 1) / ((al + 1) * (2 * nn + s + 1) * (2 * nn + s + 2));
  r.b_n = 2 * (al - be) * nn * (nn + s + 1) / ((al + 1) * (2 * nn + s) * (2 * nn + s + 2));
  r.c_n = Rational((s + 2) * nn * (nn + be) / ((al + 1) * (2 * nn + s) * (2 * nn + s + 1)));
  return r;
}

inline RecurrenceCoeffs jacobi_rec_ab(const Rational& a, const Rational& b, unsigned n) {
  RecurrenceCoeffs r;
  r.n = n;
  if (n == 0) {
    r.a_n = (a + b + 1) / (a + 1);
    r.b_n = -b / (a + 1);
    return r;
  }
  const Rational nn = n;
  r.a_n = (a + 1) * (nn + a) * (2 * nn + a + b + 1) / ((a + b + 1) * (2 * nn + a) * (2 * nn + a + 1));
  r.b_n = 4 * b * nn * (nn + a) / ((a + b + 1) * (2 * nn + a - 1) * (2 * nn + a + 1));
  r.c_n = Rational((a + 1) * nn * (2 * nn + a - b - 1) / ((a + b + 1) * (2 * nn + a - 1) * (2 * nn + a)));
  return r;
}

}  // namespace detail

/// Three-term recurrence coefficients. Evaluated in both the (alpha, beta)
/// and the (a, b) parametrization; the two must agree exactly.
inline RecurrenceCoeffs jacobi_rec_coeffs(const JacobiParams& p, unsigned n) {
  RecurrenceCoeffs x = detail::jacobi_rec_alpha_beta(p.alpha(), p.beta(), n);
  RecurrenceCoeffs y = detail::jacobi_rec_ab(p.a(), p.b(), n);
  if (x.a_n != y.a_n || x.b_n != y.b_n || x.c_n != y.c_n)
    throw std::logic_error("Jacobi recurrence coefficients disagree between parametrizations");
  return x;
}

/// R_n^(alpha,beta)(x) via the recurrence solved for R_{n+1}.
inline Rational jacobi_eval(const JacobiParams& p, unsigned n, const Rational& x) {
  if (n == 0) return 1;
  const RecurrenceCoeffs r0 = jacobi_rec_coeffs(p, 0);
  const Rational r1 = (x - r0.b_n) / r0.a_n;
  Rational prev = 1, cur = r1;
  for (unsigned k = 1; k < n; ++k) {
    const RecurrenceCoeffs rk = jacobi_rec_coeffs(p, k);
    Rational next = ((r1 - rk.b_n) * cur - *rk.c_n * prev) / rk.a_n;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Coefficient functions of the three-point recursion in k
///   theta(j) g(s+j+1) = iota(j) g(s+j) + kappa(j) g(s+j-1),   1 <= j <= 2m-1,
/// for the product R_m R_{m+s}.
struct RecursionTriple {
  Rational theta;
  Rational iota;
  Rational kappa;
};

/// theta, iota, kappa at real j in [1, 2m-1] (integer j is the recursion
/// proper; rational j is the continuation used in zero counting).
inline RecursionTriple theta_iota_kappa(const JacobiParams& p, unsigned m, unsigned s, const Rational& j) {
  if (m < 1) throw std::domain_error("theta_iota_kappa requires m >= 1");
  if (j < 1 || j > 2 * m - 1) throw std::domain_error("theta_iota_kappa requires 1 <= j <= 2m-1");
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational mm = m;
  const Rational ss = s;

  RecursionTriple t;
  t.theta = (2 * mm - j + a - 1) * (2 * mm + 2 * ss + j + a + 1) * (2 * ss + j + 1) * (2 * ss + 2 * j + a - b + 1) *
            (j + 1) / ((2 * ss + 2 * j + a + 1) * (2 * ss + 2 * j + a + 2));

  // 2s + 2j + a - 1 >= 1 + a > 0 on the domain.
  t.iota = b * ((2 * mm - j) * (2 * mm + 2 * ss + j + 2 * a) * (2 * ss + j + 1) * (j + 1) / (2 * ss + 2 * j + a + 1) -
                (2 * mm - j + 1) * (2 * mm + 2 * ss + j + 2 * a - 1) * (2 * ss + j) * j / (2 * ss + 2 * j + a - 1));

  const Rational lead = (2 * mm - j + 1) * (2 * mm + 2 * ss + j + 2 * a - 1);
  if (j == 1 && s == 0 && sgn(a) == 0) {
    t.kappa = 0;
  } else {
    const Rational den = (2 * ss + 2 * j + a - 2) * (2 * ss + 2 * j + a - 1);
    if (sgn(den) == 0) throw std::domain_error("kappa is singular at this j");
    t.kappa = lead * (2 * ss + j + a - 1) * (2 * ss + 2 * j + a + b - 1) * (j + a - 1) / den;
  }
  return t;
}

inline RecursionTriple theta_iota_kappa(const JacobiParams& p, unsigned m, unsigned s, unsigned j) {
  return theta_iota_kappa(p, m, s, Rational(j));
}

/// Closed-form coefficients at the two ends of the support of R_m R_{m+s}.
struct BoundaryCoeffs {
  Rational lowest;         // g(m, m+s; s)
  Rational next_lowest;    // g(m, m+s; s+1)
  Rational next_highest;   // g(m, m+s; s+2m-1)
  Rational highest;        // g(m, m+s; s+2m)
};

/// All denominators are positive for alpha, beta > -1 and m >= 1:
/// binom(m + (a+b-1)/2, m) = (alpha+1)_m / m!, binom(2m+2s+a, 2m) =
/// (2s+a+1)_{2m} / (2m)!, 2s+a-b+1 = 2s+2beta+2, 4m+2s+a+b-1 = 4m+2s+2alpha,
/// and 2m+a-1 >= a+1.
inline BoundaryCoeffs gasper_boundary(const JacobiParams& p, unsigned m, unsigned s) {
  if (m < 1) throw std::domain_error("gasper_boundary requires m >= 1");
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational mm = m;
  const Rational ss = s;
  const Rational half_amb = (a - b - 1) / 2;  // = beta
  const Rational half_apb = (a + b - 1) / 2;  // = alpha

  BoundaryCoeffs g;
  g.lowest = gen_binomial(mm + ss, m) * gen_binomial(2 * mm + a - 1, m) * gen_binomial(mm + ss + half_amb, m) /
             (gen_binomial(2 * mm, m) * gen_binomial(2 * mm + 2 * ss + a, 2 * m) * gen_binomial(mm + half_apb, m));
  g.highest = gen_binomial(2 * mm + 2 * ss + a - 1, m + s) * gen_binomial(2 * mm + a - 1, m) *
              gen_binomial(2 * mm + ss + half_apb, 2 * m + s) /
              (gen_binomial(4 * mm + 2 * ss + a - 1, 2 * m + s) * gen_binomial(mm + ss + half_apb, m + s) *
               gen_binomial(mm + half_apb, m));
  g.next_lowest = 4 * b * mm * (mm + ss + a) * (2 * ss + a + 2) /
                  ((2 * mm + 2 * ss + a + 1) * (2 * mm + a - 1) * (2 * ss + a - b + 1)) * g.lowest;
  g.next_highest = 4 * b * mm * (mm + ss) * (4 * mm + 2 * ss + a - 2) /
                   ((4 * mm + 2 * ss + a + b - 1) * (2 * mm + 2 * ss + a - 1) * (2 * mm + a - 1)) * g.highest;
  return g;
}

/// Linearization coefficients g_R(m, n; k) of R_m R_n.
///
/// With m <= n and s = n - m, the four outermost coefficients come from
/// closed forms and the interior ones from the forward recursion over
/// j = 1 .. 2m-2, where theta > 0. theta(2m-1) may vanish (it carries the
/// factor 2m-j+a-1 = a), so the last recursion instance is never divided
/// by: it is checked as an exact identity against the closed-form top,
/// together with agreement of the recursed g(s+2m-1) with its closed form.
/// A failed check throws std::logic_error.
inline CoeffVector linearize_jacobi(const JacobiParams& p, unsigned m_in, unsigned n_in) {
  const unsigned m = std::min(m_in, n_in), n = std::max(m_in, n_in);
  if (m == 0) return CoeffVector(m_in, n_in, Family::jacobi, {Rational(1)});
  const unsigned s = n - m;
  const BoundaryCoeffs bc = gasper_boundary(p, m, s);

  std::vector<Rational> g(2 * m + 1);  // g[j] = g_R(m, m+s; s+j)
  g[0] = bc.lowest;
  g[1] = bc.next_lowest;
  for (unsigned j = 1; j + 1 <= 2 * m - 1; ++j) {
    const RecursionTriple t = theta_iota_kappa(p, m, s, j);
    g[j + 1] = (t.iota * g[j] + t.kappa * g[j - 1]) / t.theta;
  }
  if (g[2 * m - 1] != bc.next_highest)
    throw std::logic_error("Gasper recursion disagrees with closed form g(m,m+s;s+2m-1)");
  g[2 * m] = bc.highest;

  const RecursionTriple top = theta_iota_kappa(p, m, s, 2 * m - 1);
  if (top.theta * g[2 * m] != top.iota * g[2 * m - 1] + top.kappa * g[2 * m - 2])
    throw std::logic_error("Gasper recursion identity fails at j = 2m-1");

  return CoeffVector(m_in, n_in, Family::jacobi, std::move(g));
}

/// g_R^+(m, n; k): the coefficients of R^(alpha, beta+1).
inline CoeffVector linearize_jacobi_plus(const JacobiParams& p, unsigned m, unsigned n) {
  CoeffVector cv = linearize_jacobi(p.plus(), m, n);
  return CoeffVector(cv.m(), cv.n(), Family::jacobi_plus, cv.values());
}

/// Coefficients of the parameter-swapped sequence R^(beta, alpha), from
///   (-1)^(m+n+k) g~(m,n;k) = (alpha+1)_m (alpha+1)_n (beta+1)_k
///                            / ((alpha+1)_k (beta+1)_m (beta+1)_n) g(m,n;k).
inline CoeffVector reflect_coeffs(const JacobiParams& p, const CoeffVector& cv) {
  if (cv.family() != Family::jacobi) throw std::domain_error("reflect_coeffs expects a jacobi coefficient vector");
  const Rational ap1 = p.alpha() + 1;
  const Rational bp1 = p.beta() + 1;
  const unsigned m = cv.m(), n = cv.n();
  const Rational outer = pochhammer(ap1, m) * pochhammer(ap1, n) / (pochhammer(bp1, m) * pochhammer(bp1, n));
  std::vector<Rational> out;
  out.reserve(cv.values().size());
  for (unsigned k = cv.k_min(); k <= cv.k_max(); ++k) {
    Rational v = outer * pochhammer(bp1, k) / pochhammer(ap1, k) * cv.at(k);
    if ((m + n + k) % 2 == 1) v = -v;
    out.push_back(std::move(v));
  }
  return CoeffVector(m, n, Family::jacobi, std::move(out));
}

}  // namespace poslin

#endif  // POSLIN_JACOBI_HPP

#ifndef POSLIN_GENCHEB_HPP
#define POSLIN_GENCHEB_HPP

// Generalized Chebyshev polynomials T_n^(alpha,beta), the quadratic
// transforms
//   T_2n(x) = R_n^(alpha,beta)(2x^2 - 1),  T_2n+1(x) = x R_n^(alpha,beta+1)(2x^2 - 1),
// and their linearization coefficients assembled from g_R and g_R^+.

#include "poslin/coeff_vector.hpp"
#include "poslin/jacobi.hpp"
#include "poslin/params.hpp"
#include "poslin/rational.hpp"

#include <stdexcept>
#include <vector>

namespace poslin {

/// x T_n = a_n T_{n+1} + c_n T_{n-1}.
struct GenChebCoeffs {
  unsigned n = 0;
  Rational a_n;
  Rational c_n;
};

inline GenChebCoeffs gencheb_rec_coeffs(const JacobiParams& p, unsigned n) {
  if (n < 1) throw std::domain_error("gencheb_rec_coeffs requires n >= 1");
  const Rational& al = p.alpha();
  const Rational& be = p.beta();
  GenChebCoeffs r;
  r.n = n;
  if (n % 2 == 1) {
    const Rational h = (n + 1) / 2;
    r.a_n = (h + al) / (2 * h + al + be);
    r.c_n = (h + be) / (2 * h + al + be);
  } else {
    const Rational h = n / 2;
    r.a_n = (h + al + be + 1) / (2 * h + al + be + 1);
    r.c_n = h / (2 * h + al + be + 1);
  }
  return r;
}

/// T_n(x) by the quadratic transform, cross-checked against the
/// three-term recurrence.
inline Rational gencheb_eval(const JacobiParams& p, unsigned n, const Rational& x) {
  const Rational y = 2 * x * x - 1;
  Rational via_transform = (n % 2 == 0) ? jacobi_eval(p, n / 2, y) : Rational(x * jacobi_eval(p.plus(), n / 2, y));

  Rational prev = 1, cur = x;
  if (n == 0) cur = 1;
  for (unsigned k = 1; k < n; ++k) {
    const GenChebCoeffs r = gencheb_rec_coeffs(p, k);
    Rational next = (x * cur - r.c_n * prev) / r.a_n;
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (cur != via_transform) throw std::logic_error("generalized Chebyshev evaluation routes disagree");
  return via_transform;
}

/// h_T(0..N) with h_T(n) = 1 / g_T(n, n; 0).
class NormTable {
 public:
  explicit NormTable(std::vector<Rational> values) : values_(std::move(values)) {}
  const Rational& operator[](unsigned n) const { return values_.at(n); }
  const std::vector<Rational>& values() const { return values_; }
  unsigned max_index() const { return static_cast<unsigned>(values_.size()) - 1; }

 private:
  std::vector<Rational> values_;
};

/// g_T(n, n; 0) from the closed form for the lowest Jacobi coefficient:
/// g_R(k, k; 0) for n = 2k, and c_1^T g_R^+(k, k; 0) for n = 2k+1.
inline Rational gencheb_lowest_diagonal(const JacobiParams& p, unsigned n) {
  if (n == 0) return 1;
  const unsigned k = n / 2;
  if (n % 2 == 0) return gasper_boundary(p, k, 0).lowest;
  const Rational c1 = gencheb_rec_coeffs(p, 1).c_n;
  if (k == 0) return c1;
  return c1 * gasper_boundary(p.plus(), k, 0).lowest;
}

inline NormTable gencheb_norm_h(const JacobiParams& p, unsigned N) {
  std::vector<Rational> h(N + 1);
  for (unsigned n = 0; n <= N; ++n) h[n] = 1 / gencheb_lowest_diagonal(p, n);
  return NormTable(std::move(h));
}

namespace detail {

/// g_T(2m'+1, 2n'+1; K) for all K in range, from g_R^+(m', n'; .).
inline CoeffVector gencheb_odd_odd(const JacobiParams& p, unsigned mh, unsigned nh) {
  const CoeffVector gp = linearize_jacobi_plus(p, mh, nh);
  const unsigned m = 2 * mh + 1, n = 2 * nh + 1;
  const unsigned lo = gp.k_min(), hi = gp.k_max();
  std::vector<Rational> out(CoeffVector::size_for(m, n));
  const unsigned K0 = m > n ? m - n : n - m;  // = 2 lo
  for (unsigned k = lo; k <= hi + 1; ++k) {
    Rational v;
    if (k == lo) {
      v = gencheb_rec_coeffs(p, 2 * lo + 1).c_n * gp.at(lo);
    } else if (k == hi + 1) {
      v = gencheb_rec_coeffs(p, 2 * hi + 1).a_n * gp.at(hi);
    } else {
      v = gencheb_rec_coeffs(p, 2 * k - 1).a_n * gp.at(k - 1) + gencheb_rec_coeffs(p, 2 * k + 1).c_n * gp.at(k);
    }
    out[2 * k - K0] = std::move(v);
  }
  return CoeffVector(m, n, Family::gencheb, std::move(out));
}

}  // namespace detail

/// Linearization coefficients g_T(m, n; k) of T_m T_n. Entries with m+n-k
/// odd are stored as explicit zeros.
///
///   even x even:  g_T(2m', 2n'; 2k) = g_R(m', n'; k)
///   odd x odd:    from g_R^+(m', n'; .) and the a^T, c^T coefficients
///   odd x even:   g_T(2m'+1, 2n'; 2k+1) = h_T(2k+1)/h_T(2n') g_T(2m'+1, 2k+1; 2n')
///   even x odd:   by symmetry
inline CoeffVector linearize_gencheb(const JacobiParams& p, unsigned m, unsigned n) {
  if (m == 0 || n == 0) return CoeffVector(m, n, Family::gencheb, std::vector<Rational>{Rational(1)});
  const bool m_odd = m % 2 == 1, n_odd = n % 2 == 1;

  if (!m_odd && !n_odd) {
    const CoeffVector g = linearize_jacobi(p, m / 2, n / 2);
    std::vector<Rational> out(CoeffVector::size_for(m, n));
    const unsigned K0 = m > n ? m - n : n - m;
    for (unsigned k = g.k_min(); k <= g.k_max(); ++k) out[2 * k - K0] = g.at(k);
    return CoeffVector(m, n, Family::gencheb, std::move(out));
  }
  if (m_odd && n_odd) return detail::gencheb_odd_odd(p, m / 2, n / 2);

  const unsigned odd = m_odd ? m : n;
  const unsigned even = m_odd ? n : m;
  const NormTable h = gencheb_norm_h(p, m + n);
  const unsigned K0 = m > n ? m - n : n - m;
  std::vector<Rational> out(CoeffVector::size_for(m, n));
  for (unsigned K = K0; K <= m + n; K += 2) {
    // K is odd here; g_T(odd, K; even) via the odd x odd assembly.
    const CoeffVector inner = detail::gencheb_odd_odd(p, odd / 2, K / 2);
    out[K - K0] = h[K] / h[even] * inner.get(even);
  }
  return CoeffVector(m, n, Family::gencheb, std::move(out));
}

}  // namespace poslin

#endif  // POSLIN_GENCHEB_HPP

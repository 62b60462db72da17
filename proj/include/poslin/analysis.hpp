#ifndef POSLIN_ANALYSIS_HPP
#define POSLIN_ANALYSIS_HPP

// Sign scans over linearization coefficients and exact checks of the
// identities and inequalities behind the positivity results: zero counting
// for iota, the p/q functions and the phi sequence for odd-index
// generalized Chebyshev coefficients, and negativity witnesses.

#include "poslin/coeff_vector.hpp"
#include "poslin/gencheb.hpp"
#include "poslin/jacobi.hpp"
#include "poslin/params.hpp"
#include "poslin/polynomial.hpp"
#include "poslin/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace poslin {

// ---------------------------------------------------------------------------
// Sign scans

enum class ScanMode { jacobi_nonneg, jacobi_strict, gencheb_all, gencheb_odd, oscillation };

inline std::string_view mode_name(ScanMode m) {
  switch (m) {
    case ScanMode::jacobi_nonneg: return "jacobi_nonneg";
    case ScanMode::jacobi_strict: return "jacobi_strict";
    case ScanMode::gencheb_all: return "gencheb_all";
    case ScanMode::gencheb_odd: return "gencheb_odd";
    case ScanMode::oscillation: return "oscillation";
  }
  return "?";
}

enum class Verdict { all_nonneg, all_positive_on_support, violation };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::all_nonneg: return "all_nonneg";
    case Verdict::all_positive_on_support: return "all_positive_on_support";
    case Verdict::violation: return "violation";
  }
  return "?";
}

struct Triple {
  unsigned m = 0, n = 0, k = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Outcome of a scan over all m <= n <= degrees_scanned. `witness` is the
/// first negative entry in (m, n, k) lexicographic order; `first_zero` the
/// first exactly vanishing entry on the support.
struct SignReport {
  ScanMode mode = ScanMode::jacobi_nonneg;
  Verdict verdict = Verdict::all_positive_on_support;
  Rational min_value;
  std::optional<Triple> witness;
  std::optional<Rational> witness_value;
  std::optional<Triple> first_zero;
  unsigned degrees_scanned = 0;
};

/// The coefficient vector a scan mode inspects for the pair (m, n):
/// g_R, g_T, or (-1)^(m+n+k) times the swapped-parameter coefficients.
inline CoeffVector scanned_coefficients(const JacobiParams& p, unsigned m, unsigned n, ScanMode mode) {
  switch (mode) {
    case ScanMode::jacobi_nonneg:
    case ScanMode::jacobi_strict: return linearize_jacobi(p, m, n);
    case ScanMode::gencheb_all:
    case ScanMode::gencheb_odd: return linearize_gencheb(p, m, n);
    case ScanMode::oscillation: {
      const CoeffVector swapped = reflect_coeffs(p, linearize_jacobi(p, m, n));
      std::vector<Rational> v;
      for (unsigned k = swapped.k_min(); k <= swapped.k_max(); ++k)
        v.push_back((m + n + k) % 2 == 0 ? swapped.at(k) : Rational(-swapped.at(k)));
      return CoeffVector(m, n, Family::jacobi, std::move(v));
    }
  }
  throw std::logic_error("unknown scan mode");
}

inline SignReport scan_sign_pattern(const JacobiParams& p, unsigned max_degree, ScanMode mode) {
  SignReport rep;
  rep.mode = mode;
  rep.degrees_scanned = max_degree;
  const bool gencheb = mode == ScanMode::gencheb_all || mode == ScanMode::gencheb_odd;
  bool any = false;
  for (unsigned m = 0; m <= max_degree; ++m) {
    for (unsigned n = m; n <= max_degree; ++n) {
      if (mode == ScanMode::gencheb_odd && m % 2 == 0 && n % 2 == 0) continue;
      const CoeffVector cv = scanned_coefficients(p, m, n, mode);
      for (unsigned k = cv.k_min(); k <= cv.k_max(); ++k) {
        if (gencheb && (m + n - k) % 2 == 1) continue;  // structural zero
        const Rational& v = cv.at(k);
        if (!any || v < rep.min_value) rep.min_value = v;
        any = true;
        if (sgn(v) < 0 && !rep.witness) {
          rep.witness = Triple{m, n, k};
          rep.witness_value = v;
        }
        if (sgn(v) == 0 && !rep.first_zero) rep.first_zero = Triple{m, n, k};
      }
    }
  }
  if (rep.witness) rep.verdict = Verdict::violation;
  else if (rep.first_zero) rep.verdict = Verdict::all_nonneg;
  else rep.verdict = Verdict::all_positive_on_support;
  return rep;
}

// ---------------------------------------------------------------------------
// Zero structure of iota(m, m+s; .) on the real interval [1, 2m-1]

/// iota(m, m+s; j) (2s+2j+a+1)(2s+2j+a-1) as a polynomial in j. The
/// multiplier is positive on [1, 2m-1], so zeros and signs there agree.
inline RationalPolynomial iota_numerator(const JacobiParams& p, unsigned m, unsigned s) {
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational M = m, S = s;
  using P = RationalPolynomial;
  const P j = P::monomial(1, 1);
  auto lin = [&](const Rational& c0, const Rational& c1) { return P({c0, c1}); };  // c0 + c1 j

  const P first = lin(2 * M, -1) * lin(2 * M + 2 * S + 2 * a, 1) * lin(2 * S + 1, 1) * lin(1, 1) *
                  lin(2 * S + a - 1, 2);
  const P second = lin(2 * M + 1, -1) * lin(2 * M + 2 * S + 2 * a - 1, 1) * lin(2 * S, 1) * j *
                   lin(2 * S + a + 1, 2);
  return (first - second) * b;
}

/// Number of distinct zeros of iota(m, m+s; .) on the closed interval
/// [1, 2m-1]; std::nullopt when b = 0 (iota vanishes identically).
inline std::optional<unsigned> iota_zero_count(const JacobiParams& p, unsigned m, unsigned s) {
  if (m < 1) throw std::domain_error("iota_zero_count requires m >= 1");
  if (sgn(p.b()) == 0) return std::nullopt;
  const RationalPolynomial num = iota_numerator(p, m, s);
  const unsigned at_one = sgn(num(Rational(1))) == 0 ? 1u : 0u;
  if (m == 1) return at_one;
  return count_real_roots(num, Rational(1), Rational(2 * m - 1)) + at_one;
}

/// chi_m(j) with iota(m, m; j) = -b chi_m(j) / ((2j+a-1)(2j+a+1)).
inline RationalPolynomial chi_m_poly(const JacobiParams& p, unsigned m) {
  if (m < 1) throw std::domain_error("chi_m_poly requires m >= 1");
  const Rational& a = p.a();
  const Rational M = m;
  using P = RationalPolynomial;
  const P j = P::monomial(1, 1);
  auto lin = [&](const Rational& c0, const Rational& c1) { return P({c0, c1}); };
  return lin(2 * M + 1, -1) * lin(2 * M + 2 * a - 1, 1) * j * j * lin(a + 1, 2) -
         lin(2 * M, -1) * lin(2 * M + 2 * a, 1) * lin(1, 1) * lin(1, 1) * lin(a - 1, 2);
}

// ---------------------------------------------------------------------------
// p/q functions for the odd-index generalized Chebyshev coefficients

/// p(j), q(j) at (m, s, j), built from theta^+, iota^+, kappa^+ (parameters
/// (alpha, beta+1)) and the generalized Chebyshev recurrence coefficients,
/// together with their m-independent parts in
///   p = p_inf + p_star / ((2m-j+a)(2m+2s+j+a+2)),  likewise for q.
struct PQRecord {
  unsigned m = 0, s = 0, j = 0;
  Rational p, q;
  Rational p_inf, p_star, q_inf, q_star;
};

namespace detail {

struct PQLimits {
  Rational p_inf, p_star, q_inf, q_star;
};

inline PQLimits pq_limits(const Rational& a, const Rational& b, unsigned s_, const Rational& j) {
  const Rational s = s_;
  const Rational common = (2 * s + j + 1) * (2 * s + 2 * j + a) * (2 * s + 2 * j + a + b + 1) * (j + 1);
  PQLimits r;
  r.p_inf = -1 + (2 * s + 2 * j + a + 2) / common *
                     (b * (2 * s + j + 1) * (2 * s + 2 * j + a) * (j + 1) +
                      (1 - b) * (2 * s + j) * (2 * s + 2 * j + a + 1) * j);
  r.p_star = (1 - b) * (2 * s + j + a) * (2 * s + 2 * j + a + 1) * (2 * s + 2 * j + a + 2) * (j + a) *
             (2 * s + 2 * j + 1) / common;
  r.q_inf = (2 * s + 2 * j + a + 2) * (2 * s + j + a) * (2 * s + 2 * j + a - b + 1) * (j + a) / common;
  r.q_star = (2 * s + 2 * j + a + 2) / common * (1 - a) * (2 * s + j + a) * (2 * s + 2 * j + a + 1) * (j + a) *
             (2 * s + 2 * j + a - b + 1);
  return r;
}

}  // namespace detail

inline PQRecord pq_values(const JacobiParams& p, unsigned m, unsigned s, unsigned j) {
  if (m < 1 || j < 1 || j > 2 * m - 1) throw std::domain_error("pq_values requires m >= 1 and 1 <= j <= 2m-1");
  const RecursionTriple t = theta_iota_kappa(p.plus(), m, s, j);
  if (sgn(t.theta) == 0) throw std::domain_error("theta^+ vanishes: p and q are singular here");
  auto A = [&](unsigned n) { return gencheb_rec_coeffs(p, n).a_n; };
  auto C = [&](unsigned n) { return gencheb_rec_coeffs(p, n).c_n; };
  const unsigned base = 2 * s + 2 * j;

  PQRecord r;
  r.m = m;
  r.s = s;
  r.j = j;
  r.p = C(base + 3) / A(base + 1) * t.iota / t.theta;
  r.q = C(base + 1) * C(base + 3) / (A(base - 1) * A(base + 1)) * t.kappa / t.theta;

  const Rational& a = p.a();
  const detail::PQLimits lim = detail::pq_limits(a, p.b(), s, Rational(j));
  r.p_inf = lim.p_inf;
  r.p_star = lim.p_star;
  r.q_inf = lim.q_inf;
  r.q_star = lim.q_star;
  const Rational denom = (2 * m - j + a) * (2 * m + 2 * s + j + a + 2);
  if (r.p != r.p_inf + r.p_star / denom || r.q != r.q_inf + r.q_star / denom)
    throw std::logic_error("p/q decomposition identity fails");
  return r;
}

/// omega_j = q_inf(j+1) - [1 + p_inf(j+1)][q_inf(j) - p_inf(j)], closed form.
inline Rational omega_closed_form(const JacobiParams& p, unsigned s_, unsigned j_) {
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational s = s_, j = j_;
  return (b - a) * b * (2 * s * (2 * s + 2 * j + a + 2) + (j + a) * (2 * j + 4) + 1 - a) /
         ((2 * s + j + 1) * (2 * s + j + 2) * (j + 1) * (j + 2)) * (2 * s + 2 * j + a + 2) * (2 * s + 2 * j + a + 4) /
         ((2 * s + 2 * j + a + b + 1) * (2 * s + 2 * j + a + b + 3));
}

struct PQInequalityRow {
  unsigned j = 0;
  Rational lhs;  // [1 + p(j+1)][q(j) - p(j)]
  Rational rhs;  // q(j+1)
  bool holds = false;
  Rational omega;
  bool omega_positive = false;
  bool omega_matches_limits = false;
};

/// [1 + p(j+1)][q(j) - p(j)] < q(j+1) for j = 1 .. 2m-2, with omega_j.
inline std::vector<PQInequalityRow> pq_inequality_check(const JacobiParams& p, unsigned m, unsigned s) {
  if (m < 2) throw std::domain_error("pq_inequality_check requires m >= 2");
  std::vector<PQRecord> rec;
  for (unsigned j = 1; j <= 2 * m - 1; ++j) rec.push_back(pq_values(p, m, s, j));
  std::vector<PQInequalityRow> rows;
  for (unsigned j = 1; j <= 2 * m - 2; ++j) {
    const PQRecord& cur = rec[j - 1];
    const PQRecord& nxt = rec[j];
    PQInequalityRow row;
    row.j = j;
    row.lhs = (1 + nxt.p) * (cur.q - cur.p);
    row.rhs = nxt.q;
    row.holds = row.lhs < row.rhs;
    row.omega = omega_closed_form(p, s, j);
    row.omega_positive = sgn(row.omega) > 0;
    row.omega_matches_limits = row.omega == nxt.q_inf - (1 + nxt.p_inf) * (cur.q_inf - cur.p_inf);
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// phi(j) = c^T_{2s+2j+1} / a^T_{2s+2j-1} g_R^+(m,m+s;s+j) / g_R^+(m,m+s;s+j-1)

struct PhiSequence {
  unsigned m = 0, s = 0;
  std::vector<Rational> values;  // phi(1) .. phi(2m)
  bool all_negative = false;
  /// phi(2i) < -1 and phi(2i-1) > -1 for every i <= m.
  bool alternates = false;
  /// phi(j+1) = p(j) + q(j) / phi(j) for j = 1 .. 2m-1.
  bool recurrence_holds = false;

  const Rational& at(unsigned j) const { return values.at(j - 1); }
};

inline PhiSequence phi_sequence(const JacobiParams& p, unsigned m, unsigned s) {
  if (m < 1) throw std::domain_error("phi_sequence requires m >= 1");
  const CoeffVector gp = linearize_jacobi_plus(p, m, m + s);
  PhiSequence phi;
  phi.m = m;
  phi.s = s;
  for (unsigned j = 1; j <= 2 * m; ++j) {
    const Rational& below = gp.at(s + j - 1);
    if (sgn(below) == 0) throw std::domain_error("g_R^+ vanishes: phi undefined at these parameters");
    phi.values.push_back(gencheb_rec_coeffs(p, 2 * s + 2 * j + 1).c_n / gencheb_rec_coeffs(p, 2 * s + 2 * j - 1).a_n *
                         gp.at(s + j) / below);
  }
  phi.all_negative = true;
  phi.alternates = true;
  for (unsigned j = 1; j <= 2 * m; ++j) {
    const Rational& v = phi.at(j);
    if (sgn(v) >= 0) phi.all_negative = false;
    if (j % 2 == 0 ? !(v < -1) : !(v > -1)) phi.alternates = false;
  }
  phi.recurrence_holds = true;
  for (unsigned j = 1; j + 1 <= 2 * m; ++j) {
    if (sgn(phi.at(j)) == 0) {
      phi.recurrence_holds = false;
      continue;
    }
    const PQRecord r = pq_values(p, m, s, j);
    if (phi.at(j + 1) != r.p + r.q / phi.at(j)) phi.recurrence_holds = false;
  }
  return phi;
}

// ---------------------------------------------------------------------------
// Negativity witnesses for odd-index generalized Chebyshev coefficients

struct Witness {
  unsigned m = 0, n = 0, k = 0;
  Rational value;
};

/// First strictly negative g_T(m, n; k) with m or n odd, scanning by the
/// larger index n = 1 .. max_degree. At each n the families that turn
/// negative for large m are tried first: g_T(2i+1, 2i+2s+1; 2s+2) when
/// b < 0, and g_T(2i+1, 2i+1; 4) when a^2 + 2b^2 + 3a < 0. std::nullopt
/// means inconclusive up to max_degree, not absence.
inline std::optional<Witness> find_negativity_witness(const JacobiParams& p, unsigned max_degree) {
  const bool b_negative = sgn(p.b()) < 0;
  const bool form_negative = sgn(vprime_form(p.a(), p.b())) < 0;
  for (unsigned n = 1; n <= max_degree; ++n) {
    std::vector<Triple> guided;
    if (n % 2 == 1) {
      if (b_negative)
        for (unsigned m = 1; m <= n; m += 2) guided.push_back({m, n, n - m + 2});
      if (form_negative && n >= 3) guided.push_back({n, n, 4});
    }
    for (const Triple& t : guided) {
      const CoeffVector cv = linearize_gencheb(p, t.m, t.n);
      if (cv.in_range(t.k) && sgn(cv.at(t.k)) < 0) return Witness{t.m, t.n, t.k, cv.at(t.k)};
    }
    for (unsigned m = 0; m <= n; ++m) {
      if (m % 2 == 0 && n % 2 == 0) continue;
      const CoeffVector cv = linearize_gencheb(p, m, n);
      for (unsigned k = cv.k_min(); k <= cv.k_max(); ++k)
        if (sgn(cv.at(k)) < 0) return Witness{m, n, k, cv.at(k)};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exact identity audits. Each returns the value of the same quantity along
// independent routes; all entries must coincide.

struct IdentityAudit {
  Rational lhs;     // built from the linearization coefficients
  Rational middle;  // built from the recursion functions and closed forms
  Rational rhs;     // polynomial form in (a, b, m, s)
  bool holds() const { return lhs == middle && middle == rhs; }
};

/// Normalized theta(1) g_R(m,m+s;s+2), m >= 2.
inline IdentityAudit audit_lower_decomposition(const JacobiParams& p, unsigned m, unsigned s) {
  if (m < 2) throw std::domain_error("audit_lower_decomposition requires m >= 2");
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational M = m, S = s;
  const BoundaryCoeffs bc = gasper_boundary(p, m, s);
  const RecursionTriple t = theta_iota_kappa(p, m, s, 1u);
  const Rational scale = (2 * M + a - 1) * (2 * S + a - b + 1) * (2 * M + 2 * S + a + 1) * (2 * S + a + 3) /
                         (4 * M * (M + S + a) * (2 * S + a + 1) * bc.lowest);
  IdentityAudit r;
  r.lhs = scale * t.theta * linearize_jacobi(p, m, m + s).at(s + 2);
  r.middle = scale * (t.iota * bc.next_lowest + t.kappa * bc.lowest);
  const Rational f = vprime_form(a, b);
  r.rhs = (b * b + a) * (2 * M - 4) * (2 * M + 2 * S + 2 * a + 4) * 2 * S +
          f * ((2 * M - 4) * (2 * M + 2 * S + 2 * a + 4) + 2 * S * (2 * S + 2 * a + 8) + (a + 3) * (a + 5)) -
          3 * (a + 1) * (a + 2) * b * b;
  return r;
}

/// Normalized kappa(2m-1) g_R(m,m+s;s+2m-2), m >= 2.
inline IdentityAudit audit_upper_decomposition(const JacobiParams& p, unsigned m, unsigned s) {
  if (m < 2) throw std::domain_error("audit_upper_decomposition requires m >= 2");
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational M = m, S = s;
  const BoundaryCoeffs bc = gasper_boundary(p, m, s);
  const RecursionTriple t = theta_iota_kappa(p, m, s, 2 * m - 1);
  const Rational scale = (2 * M + a - 1) * (2 * M + 2 * S + a - 1) * (4 * M + 2 * S + a - 3) *
                         (4 * M + 2 * S + a + b - 1) / (4 * M * (M + S) * (4 * M + 2 * S + a - 1) * bc.highest);
  IdentityAudit r;
  r.lhs = scale * t.kappa * linearize_jacobi(p, m, m + s).at(s + 2 * m - 2);
  r.middle = scale * (t.theta * bc.highest - t.iota * bc.next_highest);
  const Rational f = vprime_form(a, b);
  r.rhs = (b * b + a) * (2 * M - 4) * (2 * M + 2 * S - 4) * (4 * M + 2 * S + 2 * a) +
          f * ((2 * M - 4) * (6 * M + 6 * S + 4 * a + 4) + 2 * S * (2 * S + 2 * a + 8) + (a + 3) * (a + 5)) -
          3 * (a + 1) * (a + 2) * b * b;
  return r;
}

/// Scaled (c^T_{2s+3}/a^T_{2s+1} g^+(s+1)/g^+(s) + 1), the sign of
/// g_T(2m+1, 2m+2s+1; 2s+2); m >= 1.
inline IdentityAudit audit_necessity_first(const JacobiParams& p, unsigned m, unsigned s) {
  if (m < 1) throw std::domain_error("audit_necessity_first requires m >= 1");
  const Rational& a = p.a();
  const Rational& b = p.b();
  const Rational M = m, S = s;
  const Rational scale = (2 * M + a) * (2 * M + 2 * S + a + 2) * (2 * S + a + b + 1) / (2 * S + a + 2);
  const Rational ratio_c = gencheb_rec_coeffs(p, 2 * s + 3).c_n / gencheb_rec_coeffs(p, 2 * s + 1).a_n;
  const CoeffVector gp = linearize_jacobi_plus(p, m, m + s);
  const BoundaryCoeffs bp = gasper_boundary(p.plus(), m, s);
  IdentityAudit r;
  r.lhs = scale * (ratio_c * gp.at(s + 1) / gp.at(s) + 1);
  r.middle = scale * (ratio_c * bp.next_lowest / bp.lowest + 1);
  r.rhs = 4 * b * M * M + 4 * b * (S + a + 1) * M + a * (2 * S + a + b + 1);
  return r;
}

/// Scaled (c^T_{2s+5}/a^T_{2s+3} g^+(s+2)/g^+(s+1) + 1), the sign of
/// g_T(2m+1, 2m+2s+1; 2s+4); m >= 1, b != 1.
inline IdentityAudit audit_necessity_second(const JacobiParams& p, unsigned m, unsigned s) {
  if (m < 1) throw std::domain_error("audit_necessity_second requires m >= 1");
  const Rational& a = p.a();
  const Rational& b = p.b();
  if (b == 1) throw std::domain_error("audit_necessity_second requires b != 1");
  const Rational M = m, S = s;
  const Rational scale =
      4 * (b - 1) * (2 * M + a - 1) * (2 * M + 2 * S + a + 3) * (S + 1) * (2 * S + a + b + 3) / (2 * S + a + 4);
  const Rational ratio_c = gencheb_rec_coeffs(p, 2 * s + 5).c_n / gencheb_rec_coeffs(p, 2 * s + 3).a_n;
  const CoeffVector gp = linearize_jacobi_plus(p, m, m + s);
  const BoundaryCoeffs bp = gasper_boundary(p.plus(), m, s);
  const RecursionTriple tp = theta_iota_kappa(p.plus(), m, s, 1u);
  const Rational via_recursion = tp.iota / tp.theta + tp.kappa / tp.theta * bp.lowest / bp.next_lowest;
  IdentityAudit r;
  r.lhs = scale * (ratio_c * gp.at(s + 2) / gp.at(s + 1) + 1);
  r.middle = scale * (ratio_c * via_recursion + 1);
  const Rational f = vprime_form(a, b);
  r.rhs = (4 * M - 4) * (M + S + a + 2) * (f * (S + 1) - a * (a + 1) * S) +
          (a + 1) * (2 * S + a + b + 3) * ((a + 2 * b) * (2 * S + 2 - b) + f);
  return r;
}

}  // namespace poslin

#endif  // POSLIN_ANALYSIS_HPP

// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are
// exact (zero tolerance); the only numeric limits are the wall-clock budgets
// below.

#include "poslin/analysis.hpp"
#include "poslin/bruteforce.hpp"
#include "poslin/cli.hpp"
#include "poslin/gencheb.hpp"
#include "poslin/hypergeom.hpp"
#include "poslin/jacobi.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace poslin;
using poslin::testing::grid;
using poslin::testing::GridPoint;
using poslin::testing::RationalSampler;

namespace {

constexpr double kBudgetJacobiOracle = 60.0;
constexpr double kBudgetGenchebOracle = 120.0;
constexpr double kBudgetRahman = 60.0;
constexpr double kBudgetDefault = 60.0;
constexpr int kRandomSamples = 100;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void check(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget) o.fail("over time budget");
  if (!o.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, budget);
  std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title << " (" << timing << ")";
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
}

std::string at(const GridPoint& g, unsigned m, unsigned n) {
  return g.name() + " m=" + std::to_string(m) + " n=" + std::to_string(n);
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str()};
}

}  // namespace

int main() {
  std::cout << "grid: " << grid().size() << " parameter points" << std::endl;

  criterion(1, "Jacobi recursion equals brute-force oracle on the grid, 1 <= m <= n <= 8", kBudgetJacobiOracle,
            [](Outcome& o) {
              for (const auto& g : grid()) {
                const JacobiParams p = g.params();
                for (unsigned m = 1; m <= 8; ++m)
                  for (unsigned n = m; n <= 8; ++n)
                    o.check(linearize_jacobi(p, m, n) == linearize_bruteforce(p, m, n, Family::jacobi), at(g, m, n));
              }
            });

  criterion(2, "generalized Chebyshev assembly equals brute-force oracle, 0 <= m <= n <= 10, parity zeros exact",
            kBudgetGenchebOracle, [](Outcome& o) {
              for (const auto& g : grid()) {
                const JacobiParams p = g.params();
                for (unsigned m = 0; m <= 10; ++m)
                  for (unsigned n = m; n <= 10; ++n) {
                    const CoeffVector t = linearize_gencheb(p, m, n);
                    o.check(t == linearize_bruteforce(p, m, n, Family::gencheb), at(g, m, n));
                    for (unsigned k = t.k_min(); k <= t.k_max(); ++k)
                      if ((m + n - k) % 2 == 1) o.check(sgn(t.at(k)) == 0, "parity zero " + at(g, m, n));
                  }
              }
            });

  criterion(3, "corrected 9F8 representations equal the recursion inside Delta, m <= 6, s <= 4, j <= 2m",
            kBudgetRahman, [](Outcome& o) {
              unsigned points = 0, special_points = 0;
              for (const auto& g : grid()) {
                const JacobiParams p = g.params();
                if (sgn(p.a()) <= 0 || sgn(p.b()) <= 0) continue;
                ++points;
                const bool special = p.alpha() >= p.beta() && p.beta() >= rat(-1, 2);
                special_points += special;
                for (unsigned m = 1; m <= 6; ++m)
                  for (unsigned s = 0; s <= 4; ++s) {
                    const CoeffVector cv = linearize_jacobi(p, m, m + s);
                    for (unsigned j = 0; j <= 2 * m; ++j) {
                      o.check(rahman_coefficient(p, m, s, j) == cv.at(s + j), "even/odd form " + at(g, m, m + s));
                      if (special) o.check(rahman_special(p, m, s, j) == cv.at(s + j), "special form " + at(g, m, m + s));
                    }
                  }
              }
              o.check(points >= 5, "fewer than 5 grid points inside Delta");
              o.check(special_points >= 1, "no grid point in the special form's range");
            });

  criterion(4, "Dougall's formula equals the recursion at alpha = beta in {-1/4, 0, 1/2, 2}, m, n <= 8",
            kBudgetDefault, [](Outcome& o) {
              for (const Rational& alpha : {rat(-1, 4), Rational(0), rat(1, 2), Rational(2)}) {
                const JacobiParams p = make_params(alpha, alpha);
                for (unsigned m = 0; m <= 8; ++m)
                  for (unsigned n = 0; n <= 8; ++n)
                    o.check(dougall_coefficient(alpha, m, n) == linearize_jacobi(p, m, n),
                            "alpha=" + to_string(alpha) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
              }
            });

  criterion(5, "closed forms of g_R(1,1;1) and g_R(2,2;2) on 100 random rational points", kBudgetDefault,
            [](Outcome& o) {
              RationalSampler rs(2024);
              for (int i = 0; i < kRandomSamples; ++i) {
                const JacobiParams p = rs.params();
                const Rational &a = p.a(), &b = p.b();
                const Rational g11 = 4 * b / ((a + 3) * (a + b + 1));
                const Rational g22 = 4 * ((a * a + 2 * b * b + 3 * a) * (a + 3) * (a + 5) - 3 * (a + 1) * (a + 2) * b * b) /
                                     ((a + 3) * (a + 5) * (a + 6) * (a + b + 1) * (a + b + 3));
                const std::string where = "(" + to_string(p.alpha()) + "," + to_string(p.beta()) + ")";
                o.check(linearize_jacobi(p, 1, 1).at(1) == g11, "g_R(1,1;1) at " + where);
                o.check(linearize_jacobi(p, 2, 2).at(2) == g22, "g_R(2,2;2) at " + where);
              }
            });

  criterion(6, "theorem instances: sign patterns on V, V interior, V boundary, V' \\ V and b < 0", kBudgetDefault,
            [](Outcome& o) {
              unsigned v_points = 0, interior = 0, boundary = 0;
              for (const auto& g : grid()) {
                const JacobiParams p = g.params();
                const RegionReport r = classify_region(p);
                if (!r.in_V) continue;
                ++v_points;
                o.check(scan_sign_pattern(p, 8, ScanMode::jacobi_nonneg).verdict != Verdict::violation,
                        "(a) jacobi nonneg " + g.name());
                o.check(scan_sign_pattern(p, 10, ScanMode::gencheb_all).verdict != Verdict::violation,
                        "(a) gencheb all " + g.name());
                const SignReport strict = scan_sign_pattern(p, 8, ScanMode::jacobi_strict);
                if (r.in_V_interior) {
                  ++interior;
                  o.check(strict.verdict == Verdict::all_positive_on_support, "(b) strict " + g.name());
                } else {
                  ++boundary;
                  o.check(strict.first_zero.has_value() && strict.verdict == Verdict::all_nonneg,
                          "(c) exact zero " + g.name());
                }
              }
              o.check(v_points > 0 && interior > 0 && boundary > 0, "grid lacks V, V interior or V boundary points");

              const JacobiParams vp = make_params(rat(-33, 100), rat(-87, 100));
              o.check(linearize_gencheb(vp, 4, 4).at(4) < 0, "(d) g_T(4,4;4) not negative");
              o.check(scan_sign_pattern(vp, 10, ScanMode::gencheb_odd).verdict == Verdict::all_positive_on_support,
                      "(d) odd family not strictly positive on its support");

              const JacobiParams neg = make_params(rat(-1, 2), 0);
              o.check(linearize_jacobi(neg, 1, 1).at(1) == rat(-4, 7), "(e) g_R(1,1;1) != -4/7");
              const auto w = find_negativity_witness(neg, 10);
              o.check(w.has_value() && w->value < 0 && (w->m % 2 == 1 || w->n % 2 == 1), "(e) no odd-family witness");
            });

  criterion(7, "p/q decomposition, omega_j > 0, p/q inequality, phi recurrence and alternation in V' \\ Delta",
            kBudgetDefault, [](Outcome& o) {
              unsigned points = 0;
              for (const auto& g : grid()) {
                const JacobiParams p = g.params();
                const RegionReport r = classify_region(p);
                if (!r.in_Vprime || r.in_Delta) continue;
                ++points;
                for (unsigned m = 1; m <= 4; ++m)
                  for (unsigned s = 0; s <= 3; ++s) {
                    const std::string where = at(g, m, m + s);
                    for (unsigned j = 1; j <= 2 * m - 1; ++j) pq_values(p, m, s, j);  // throws if the identity fails
                    if (m >= 2)
                      for (const auto& row : pq_inequality_check(p, m, s)) {
                        o.check(row.holds, "inequality " + where + " j=" + std::to_string(row.j));
                        o.check(row.omega_positive && row.omega_matches_limits, "omega " + where);
                      }
                    const PhiSequence phi = phi_sequence(p, m, s);
                    o.check(phi.recurrence_holds, "phi recurrence " + where);
                    o.check(phi.all_negative && phi.alternates, "phi alternation " + where);
                  }
              }
              o.check(points >= 3, "fewer than 3 grid points in V' \\ Delta");
            });

  criterion(8, "iota zero counts above and below the threshold; chi_2 spot values", kBudgetDefault, [](Outcome& o) {
    for (const auto& g : grid()) {
      const JacobiParams p = g.params();
      if (!classify_region(p).above_iota_threshold || sgn(p.b()) == 0) continue;
      for (unsigned m = 1; m <= 5; ++m)
        for (unsigned s = 0; s <= 3; ++s) o.check(*iota_zero_count(p, m, s) <= 1, "more than one zero at " + at(g, m, m + s));
    }
    const JacobiParams below = make_params_ab(rat(-31, 100), rat(1, 2));
    o.check(!classify_region(below).above_iota_threshold, "sub-threshold point misclassified");
    o.check(iota_zero_count(below, 2, 0) == 2u, "expected 2 zeros at a=-31/100, b=1/2, m=2, s=0");
    RationalSampler rs(8);
    for (int i = 0; i < kRandomSamples; ++i) {
      const JacobiParams p = i == 0 ? below : rs.params();
      const Rational& a = p.a();
      const RationalPolynomial chi = chi_m_poly(p, 2);
      o.check(chi(Rational(1)) == -16 * a * a - 44 * a - 12, "chi_2(1)");
      o.check(chi(Rational(2)) == -12 * (a + 1) * (a + 2), "chi_2(2)");
      o.check(chi(Rational(3)) == 4 * a * a + 88 * a + 196, "chi_2(3)");
    }
    o.check(chi_m_poly(below, 2)(Rational(1)) == rat(64, 625), "chi_2(1) != 64/625 at a=-31/100");
  });

  criterion(9, "decomposition and necessity identities on 100 random (a, b, m, s)", kBudgetDefault, [](Outcome& o) {
    RationalSampler rs(9);
    for (int i = 0; i < kRandomSamples; ++i) {
      const JacobiParams p = rs.params();
      const unsigned m = rs.natural(2, 6), s = rs.natural(0, 4);
      const std::string where =
          "(" + to_string(p.a()) + "," + to_string(p.b()) + ") m=" + std::to_string(m) + " s=" + std::to_string(s);
      o.check(audit_lower_decomposition(p, m, s).holds(), "lower decomposition " + where);
      o.check(audit_upper_decomposition(p, m, s).holds(), "upper decomposition " + where);
      o.check(audit_necessity_first(p, m - 1, s).holds(), "first necessity form " + where);
      if (p.b() != 1) o.check(audit_necessity_second(p, m - 1, s).holds(), "second necessity form " + where);
    }
  });

  criterion(10, "CLI examples and JSON/CSV round trip", kBudgetDefault, [](Outcome& o) {
    const CliRun c = cli({"classify", "--alpha", "-33/100", "--beta", "-87/100"});
    o.check(c.code == 0 && c.out.find("label: V′\\V") != std::string::npos, "classify example");
    const CliRun l = cli({"linearize", "--family", "gencheb", "--alpha", "1", "--beta", "0", "--m", "1", "--n", "2"});
    o.check(l.code == 0 && l.out.find("k=1: 1/4") != std::string::npos && l.out.find("k=3: 3/4") != std::string::npos,
            "linearize example");
    const CliRun s = cli({"scan", "--check", "nonneg", "--alpha", "-1/2", "--beta", "0", "--max-degree", "4"});
    o.check(s.code == 1 && s.out.find("violation at (1,1,1) value -4/7") != std::string::npos, "scan example");

    for (const char* family : {"jacobi", "jacobi-plus", "gencheb"}) {
      for (const auto& [m, n] : {std::pair{"2", "5"}, std::pair{"4", "4"}}) {
        const std::vector<std::string> base = {"linearize", "--family", family, "--alpha", "-13/40",
                                               "--beta",    "-37/40",  "--m",  m,         "--n", n};
        auto csv_args = base, json_args = base;
        csv_args.insert(csv_args.end(), {"--format", "csv"});
        json_args.insert(json_args.end(), {"--format", "json"});
        const CliRun csv = cli(csv_args), json = cli(json_args);
        std::istringstream in(csv.out);
        o.check(csv.code == 0 && json.code == 0 && read_coeffs_csv(in) == read_coeffs_json(json.out),
                std::string("round trip ") + family);
      }
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

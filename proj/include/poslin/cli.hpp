#ifndef POSLIN_CLI_HPP
#define POSLIN_CLI_HPP

// Command-line front end. run_command takes the arguments after the program
// name and writes to the given streams, so it is usable from tests.
//
// Exit codes: 0 success / property holds, 1 property violated (a witness is
// printed), 2 usage or range error.

#include "poslin/analysis.hpp"
#include "poslin/bruteforce.hpp"
#include "poslin/coeff_vector.hpp"
#include "poslin/gencheb.hpp"
#include "poslin/hypergeom.hpp"
#include "poslin/jacobi.hpp"
#include "poslin/params.hpp"
#include "poslin/rational.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace poslin {

using Json = nlohmann::ordered_json;

/// One row of a linearize table: k and the exact coefficient.
struct TableEntry {
  unsigned k = 0;
  Rational value;
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// Entries printed for a coefficient vector. For the generalized Chebyshev
/// family the structural zeros (m+n-k odd) are left out.
inline std::vector<TableEntry> table_entries(const CoeffVector& cv) {
  std::vector<TableEntry> rows;
  for (unsigned k = cv.k_min(); k <= cv.k_max(); ++k) {
    if (cv.family() == Family::gencheb && (cv.m() + cv.n() - k) % 2 == 1) continue;
    rows.push_back({k, cv.at(k)});
  }
  return rows;
}

inline std::string coeffs_to_csv(const CoeffVector& cv) {
  std::ostringstream os;
  os << "m,n,k,value_num,value_den,approx\n";
  for (const auto& e : table_entries(cv))
    os << cv.m() << ',' << cv.n() << ',' << e.k << ',' << e.value.get_num().get_str() << ','
       << e.value.get_den().get_str() << ',' << to_approx(e.value) << '\n';
  return os.str();
}

/// Reads back the table written by coeffs_to_csv.
inline std::vector<TableEntry> read_coeffs_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "m,n,k,value_num,value_den,approx")
    throw std::invalid_argument("unexpected CSV header");
  std::vector<TableEntry> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    if (f.size() != 6) throw std::invalid_argument("CSV row must have 6 fields");
    Rational v{Integer(f[3]), Integer(f[4])};
    v.canonicalize();
    rows.push_back({static_cast<unsigned>(std::stoul(f[2])), v});
  }
  return rows;
}

inline Json params_json(const JacobiParams& p) {
  return {{"alpha", to_string(p.alpha())}, {"beta", to_string(p.beta())}};
}

inline Json output_record(std::string_view command, const JacobiParams& p, Json payload,
                          std::optional<std::string> verdict) {
  Json j;
  j["command"] = command;
  j["params"] = params_json(p);
  j["payload"] = std::move(payload);
  j["verdict"] = verdict ? Json(*verdict) : Json(nullptr);
  return j;
}

inline Json coeffs_payload(const CoeffVector& cv, std::string_view method) {
  Json entries = Json::array();
  for (const auto& e : table_entries(cv)) {
    Json row = {{"k", e.k}, {"value", to_string(e.value)}, {"approx", to_approx(e.value)}};
    entries.push_back(std::move(row));
  }
  return {{"family", family_name(cv.family())}, {"method", method}, {"m", cv.m()}, {"n", cv.n()},
          {"entries", std::move(entries)}};
}

/// Reads the entries back from a linearize JSON record.
inline std::vector<TableEntry> read_coeffs_json(const std::string& text) {
  const Json j = Json::parse(text);
  std::vector<TableEntry> rows;
  for (const auto& e : j.at("payload").at("entries")) {
    auto v = parse_rational(e.at("value").get<std::string>());
    if (!v) throw std::invalid_argument("malformed rational in JSON");
    rows.push_back({e.at("k").get<unsigned>(), *v});
  }
  return rows;
}

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational parse_or_throw(const std::string& text, const char* what) {
  auto r = parse_rational(text);
  if (!r) throw UsageError(std::string("malformed rational for ") + what + ": '" + text + "' (expected p/q or integer)");
  return *r;
}

inline std::string triple_text(unsigned m, unsigned n, unsigned k) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

/// g_R(m, n; .) by a closed-form route, or std::nullopt when the method does
/// not apply at p.
inline std::optional<CoeffVector> jacobi_by_method(const JacobiParams& p, unsigned m, unsigned n,
                                                   std::string_view method) {
  if (method == "gasper") return linearize_jacobi(p, m, n);
  if (method == "brute") return linearize_bruteforce(p, m, n, Family::jacobi);
  const unsigned lo = std::min(m, n), s = (m > n ? m - n : n - m);
  if (method == "dougall") {
    if (p.alpha() != p.beta() || p.alpha() <= rat(-1, 2)) return std::nullopt;
    return dougall_coefficient(p.alpha(), m, n);
  }
  const bool rahman = method == "rahman";
  const bool special = method == "rahman-special";
  if (!rahman && !special) throw UsageError("unknown method '" + std::string(method) + "'");
  if (rahman && (sgn(p.a()) <= 0 || sgn(p.b()) <= 0)) return std::nullopt;
  if (special && !(p.alpha() >= p.beta() && p.beta() >= rat(-1, 2) && sgn(p.a()) != 0)) return std::nullopt;
  if (lo == 0) return CoeffVector(m, n, Family::jacobi, std::vector<Rational>{Rational(1)});
  std::vector<Rational> v;
  for (unsigned j = 0; j <= 2 * lo; ++j)
    v.push_back(rahman ? rahman_coefficient(p, lo, s, j) : rahman_special(p, lo, s, j));
  return CoeffVector(m, n, Family::jacobi, std::move(v));
}

inline void print_region(std::ostream& out, const JacobiParams& p, const RegionReport& r) {
  out << "alpha: " << to_string(p.alpha()) << "\n"
      << "beta: " << to_string(p.beta()) << "\n"
      << "a: " << to_string(p.a()) << "\n"
      << "b: " << to_string(p.b()) << "\n"
      << "label: " << label_text(r.label) << " (" << label_id(r.label) << ")\n"
      << "in_Delta: " << yes_no(r.in_Delta) << "\n"
      << "in_Delta_interior: " << yes_no(r.in_Delta_interior) << "\n"
      << "in_V: " << yes_no(r.in_V) << "\n"
      << "in_V_interior: " << yes_no(r.in_V_interior) << "\n"
      << "in_Vprime: " << yes_no(r.in_Vprime) << "\n"
      << "above_iota_threshold: " << yes_no(r.above_iota_threshold) << "\n"
      << "on_iota_threshold: " << yes_no(r.on_iota_threshold) << "\n";
}

inline Json region_json(const JacobiParams& p, const RegionReport& r) {
  return {{"a", to_string(p.a())},
          {"b", to_string(p.b())},
          {"label", label_text(r.label)},
          {"label_id", label_id(r.label)},
          {"in_Delta", r.in_Delta},
          {"in_Delta_interior", r.in_Delta_interior},
          {"in_V", r.in_V},
          {"in_V_interior", r.in_V_interior},
          {"in_Vprime", r.in_Vprime},
          {"above_iota_threshold", r.above_iota_threshold},
          {"on_iota_threshold", r.on_iota_threshold}};
}

/// Result of a verify run: one line per check, and the first failure.
struct VerifyLog {
  std::vector<std::string> lines;
  std::optional<std::string> first_failure;
  void record(bool ok, std::string line) {
    line += ok ? "  ok" : "  FAIL";
    if (!ok && !first_failure) first_failure = line;
    lines.push_back(std::move(line));
  }
};

inline std::string ms_text(unsigned m, unsigned s) {
  return "m=" + std::to_string(m) + " s=" + std::to_string(s);
}

inline void verify_property(const JacobiParams& p, const std::string& property, unsigned m, unsigned s,
                            VerifyLog& log) {
  if (property == "pq-inequality") {
    if (m < 2) throw std::domain_error("pq-inequality requires m >= 2");
    for (const auto& row : pq_inequality_check(p, m, s)) {
      log.record(row.holds, ms_text(m, s) + " j=" + std::to_string(row.j) + ": lhs=" + to_string(row.lhs) +
                                " < rhs=" + to_string(row.rhs));
      log.record(row.omega_positive && row.omega_matches_limits,
                 ms_text(m, s) + " j=" + std::to_string(row.j) + ": omega=" + to_string(row.omega) + " > 0");
    }
  } else if (property == "phi-alternation") {
    const PhiSequence phi = phi_sequence(p, m, s);
    for (unsigned j = 1; j <= 2 * m; ++j) {
      const Rational& v = phi.at(j);
      const bool ok = sgn(v) < 0 && (j % 2 == 0 ? v < -1 : v > -1);
      log.record(ok, ms_text(m, s) + " phi(" + std::to_string(j) + ")=" + to_string(v) +
                         (j % 2 == 0 ? " < -1" : " in (-1,0)"));
    }
    log.record(phi.recurrence_holds, ms_text(m, s) + " phi(j+1) = p(j) + q(j)/phi(j)");
  } else if (property == "iota-zeros") {
    const auto count = iota_zero_count(p, m, s);
    if (!count) {
      log.lines.push_back(ms_text(m, s) + " iota vanishes identically (b = 0): degenerate");
      return;
    }
    log.record(*count <= 1, ms_text(m, s) + " zeros of iota on [1," + std::to_string(2 * m - 1) +
                                "]: " + std::to_string(*count) + " <= 1");
  } else if (property == "recursion-consistency") {
    for (Family f : {Family::jacobi, Family::jacobi_plus}) {
      const CoeffVector fast = f == Family::jacobi ? linearize_jacobi(p, m, m + s) : linearize_jacobi_plus(p, m, m + s);
      log.record(fast == linearize_bruteforce(p, m, m + s, f),
                 ms_text(m, s) + " " + std::string(family_name(f)) + " recursion = brute force");
    }
    const CoeffVector t = linearize_gencheb(p, m, m + s);
    log.record(t == linearize_bruteforce(p, m, m + s, Family::gencheb),
               ms_text(m, s) + " gencheb assembly = brute force");
  } else if (property == "nec-identities") {
    auto add = [&](const char* name, const IdentityAudit& a) {
      log.record(a.holds(), ms_text(m, s) + " " + name + ": " + to_string(a.lhs) + " = " + to_string(a.rhs));
    };
    if (m >= 2) {
      add("lower decomposition", audit_lower_decomposition(p, m, s));
      add("upper decomposition", audit_upper_decomposition(p, m, s));
    }
    add("first necessity form", audit_necessity_first(p, m, s));
    if (p.b() != 1) add("second necessity form", audit_necessity_second(p, m, s));
  } else {
    throw UsageError("unknown property '" + property + "'");
  }
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact linearization coefficients of Jacobi and generalized Chebyshev products", "poslin"};
  app.require_subcommand(1);
  app.get_formatter()->column_width(40);

  std::string alpha_s, beta_s, family = "jacobi", method = "gasper", format = "text", check, property;
  unsigned m = 0, n = 0, s = 0, max_degree = 0;
  bool json = false;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--alpha", alpha_s, "alpha as p/q or integer")->required()->allow_extra_args(false);
    sub->add_option("--beta", beta_s, "beta as p/q or integer")->required()->allow_extra_args(false);
    sub->add_flag("--json", json, "JSON output");
  };

  auto* classify = app.add_subcommand("classify", "region membership of (alpha, beta)");
  add_params(classify);

  auto* linearize = app.add_subcommand("linearize", "coefficient vector of P_m P_n");
  add_params(linearize);
  linearize->add_option("--family", family)->check(CLI::IsMember({"jacobi", "jacobi-plus", "gencheb"}));
  linearize->add_option("--m", m)->required();
  linearize->add_option("--n", n)->required();
  linearize->add_option("--method", method)->check(CLI::IsMember({"gasper", "brute", "rahman", "rahman-special", "dougall"}));
  linearize->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  auto* compare = app.add_subcommand("compare", "cross-check every applicable method");
  add_params(compare);
  compare->add_option("--max-degree", max_degree)->required();

  auto* scan = app.add_subcommand("scan", "sign scan over all m <= n <= max-degree");
  add_params(scan);
  scan->add_option("--check", check)->required()->check(CLI::IsMember({"nonneg", "strict", "odd", "oscillation", "all"}));
  scan->add_option("--max-degree", max_degree)->required();

  auto* verify = app.add_subcommand("verify", "check a proof ingredient exactly");
  add_params(verify);
  verify->add_option("--property", property)
      ->required()
      ->check(CLI::IsMember({"pq-inequality", "phi-alternation", "iota-zeros", "recursion-consistency", "nec-identities"}));
  auto* m_opt = verify->add_option("--m", m);
  auto* s_opt = verify->add_option("--s", s);

  auto* witness = app.add_subcommand("witness", "first negative odd-index generalized Chebyshev coefficient");
  add_params(witness);
  witness->add_option("--max-degree", max_degree)->required();

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const JacobiParams p =
        make_params(detail::parse_or_throw(alpha_s, "--alpha"), detail::parse_or_throw(beta_s, "--beta"));

    if (*classify) {
      const RegionReport r = classify_region(p);
      if (json) out << output_record("classify", p, detail::region_json(p, r), std::nullopt).dump(2) << "\n";
      else detail::print_region(out, p, r);
      return 0;
    }

    if (*linearize) {
      if (json) format = "json";
      std::optional<CoeffVector> cv;
      if (family == "jacobi") {
        cv = detail::jacobi_by_method(p, m, n, method);
        if (!cv) throw std::domain_error("method '" + method + "' does not apply at these parameters");
      } else {
        const Family f = family == "gencheb" ? Family::gencheb : Family::jacobi_plus;
        if (method == "gasper") cv = f == Family::gencheb ? linearize_gencheb(p, m, n) : linearize_jacobi_plus(p, m, n);
        else if (method == "brute") cv = linearize_bruteforce(p, m, n, f);
        else throw std::domain_error("method '" + method + "' is only available for the jacobi family");
      }
      if (format == "csv") {
        out << coeffs_to_csv(*cv);
      } else if (format == "json") {
        out << output_record("linearize", p, coeffs_payload(*cv, method), std::nullopt).dump(2) << "\n";
      } else {
        out << "family: " << family << "  method: " << method << "  m=" << m << " n=" << n << "\n";
        for (const auto& e : table_entries(*cv))
          out << "k=" << e.k << ": " << to_string(e.value) << "  (approx " << to_approx(e.value) << ")\n";
      }
      return 0;
    }

    if (*compare) {
      std::size_t compared = 0, disagreements = 0;
      std::map<std::string, std::size_t> used;
      Json rows = Json::array();
      auto report = [&](const std::string& fam, const std::vector<std::pair<std::string, CoeffVector>>& results) {
        const CoeffVector& ref = results.front().second;
        for (unsigned k = ref.k_min(); k <= ref.k_max(); ++k) {
          bool agree = true;
          std::string names;
          for (const auto& [name, cv] : results) {
            agree = agree && cv.at(k) == ref.at(k);
            names += (names.empty() ? "" : "+") + name;
            ++used[name];
          }
          ++compared;
          if (!agree) ++disagreements;
          if (json) {
            rows.push_back({{"family", fam}, {"m", ref.m()}, {"n", ref.n()}, {"k", k}, {"value", to_string(ref.at(k))},
                            {"methods", names}, {"agree", agree}});
          } else {
            out << fam << " " << detail::triple_text(ref.m(), ref.n(), k) << " " << to_string(ref.at(k)) << " ["
                << names << "] " << (agree ? "agree" : "DISAGREE") << "\n";
          }
        }
      };
      for (unsigned mm = 0; mm <= max_degree; ++mm) {
        for (unsigned nn = mm; nn <= max_degree; ++nn) {
          std::vector<std::pair<std::string, CoeffVector>> jac;
          for (const char* meth : {"gasper", "brute", "rahman", "rahman-special", "dougall"})
            if (auto cv = detail::jacobi_by_method(p, mm, nn, meth)) jac.emplace_back(meth, std::move(*cv));
          report("jacobi", jac);
          report("jacobi-plus", {{"gasper", linearize_jacobi_plus(p, mm, nn)},
                                 {"brute", linearize_bruteforce(p, mm, nn, Family::jacobi_plus)}});
        }
      }
      for (unsigned mm = 0; mm <= 2 * max_degree; ++mm)
        for (unsigned nn = mm; nn <= 2 * max_degree; ++nn)
          report("gencheb", {{"gasper", linearize_gencheb(p, mm, nn)},
                             {"brute", linearize_bruteforce(p, mm, nn, Family::gencheb)}});
      std::string methods;
      for (const auto& [name, count] : used) methods += (methods.empty() ? "" : ", ") + name;
      const std::string verdict = disagreements == 0 ? "all agree" : "disagreement";
      if (json) {
        Json payload = {{"entries", std::move(rows)},
                        {"compared", compared},
                        {"disagreements", disagreements},
                        {"methods", methods}};
        out << output_record("compare", p, std::move(payload), verdict).dump(2) << "\n";
      } else {
        out << "summary: " << compared << " entries compared, methods {" << methods << "}, " << disagreements
            << " disagreements: " << verdict << "\n";
      }
      return disagreements == 0 ? 0 : 1;
    }

    if (*scan) {
      static const std::map<std::string, ScanMode> modes = {{"nonneg", ScanMode::jacobi_nonneg},
                                                            {"strict", ScanMode::jacobi_strict},
                                                            {"odd", ScanMode::gencheb_odd},
                                                            {"oscillation", ScanMode::oscillation},
                                                            {"all", ScanMode::gencheb_all}};
      const ScanMode mode = modes.at(check);
      const SignReport r = scan_sign_pattern(p, max_degree, mode);
      // strict positivity is violated by exact zeros as well as negative entries
      const bool violated = r.verdict == Verdict::violation || (mode == ScanMode::jacobi_strict && r.first_zero);
      if (json) {
        Json payload = {{"mode", mode_name(mode)},
                        {"verdict", verdict_name(r.verdict)},
                        {"min_value", to_string(r.min_value)},
                        {"degrees_scanned", r.degrees_scanned}};
        payload["witness"] = r.witness ? Json{{"m", r.witness->m}, {"n", r.witness->n}, {"k", r.witness->k},
                                              {"value", to_string(*r.witness_value)}}
                                       : Json(nullptr);
        payload["first_zero"] =
            r.first_zero ? Json{{"m", r.first_zero->m}, {"n", r.first_zero->n}, {"k", r.first_zero->k}} : Json(nullptr);
        out << output_record("scan", p, std::move(payload), std::string(violated ? "fail" : "pass")).dump(2) << "\n";
      } else {
        out << "mode: " << mode_name(mode) << "  max_degree: " << r.degrees_scanned << "\n";
        out << "min_value: " << to_string(r.min_value) << "  (approx " << to_approx(r.min_value) << ")\n";
        if (r.witness)
          out << "violation at " << detail::triple_text(r.witness->m, r.witness->n, r.witness->k) << " value "
              << to_string(*r.witness_value) << "\n";
        if (r.first_zero)
          out << "first zero at " << detail::triple_text(r.first_zero->m, r.first_zero->n, r.first_zero->k) << "\n";
        out << "verdict: " << verdict_name(r.verdict) << "\n";
      }
      return violated ? 1 : 0;
    }

    if (*verify) {
      // Without --m / --s the default desk-scale range m <= 4, s <= 3 is checked.
      const unsigned m_min = property == "pq-inequality" ? 2 : 1;
      const unsigned m_lo = m_opt->count() ? m : m_min, m_hi = m_opt->count() ? m : 4;
      const unsigned s_lo = s_opt->count() ? s : 0, s_hi = s_opt->count() ? s : 3;
      if (m_lo < 1) throw std::domain_error("--m must be at least 1");
      detail::VerifyLog log;
      for (unsigned mm = m_lo; mm <= m_hi; ++mm)
        for (unsigned ss = s_lo; ss <= s_hi; ++ss) detail::verify_property(p, property, mm, ss, log);
      const bool ok = !log.first_failure;
      if (json) {
        Json payload = {{"property", property}, {"checks", log.lines}};
        payload["witness"] = log.first_failure ? Json(*log.first_failure) : Json(nullptr);
        out << output_record("verify", p, std::move(payload), std::string(ok ? "pass" : "fail")).dump(2) << "\n";
      } else {
        for (const auto& line : log.lines) out << line << "\n";
        if (log.first_failure) out << "witness: " << *log.first_failure << "\n";
        out << "verdict: " << (ok ? "pass" : "fail") << "\n";
      }
      return ok ? 0 : 1;
    }

    if (*witness) {
      const auto w = find_negativity_witness(p, max_degree);
      if (json) {
        Json payload = w ? Json{{"m", w->m}, {"n", w->n}, {"k", w->k}, {"value", to_string(w->value)}} : Json(nullptr);
        out << output_record("witness", p, std::move(payload), std::string(w ? "negative" : "none found")).dump(2)
            << "\n";
      } else if (w) {
        out << "negative coefficient g_T" << detail::triple_text(w->m, w->n, w->k) << " = " << to_string(w->value)
            << "  (approx " << to_approx(w->value) << ")\n";
      } else {
        out << "none found up to degree " << max_degree << "\n";
      }
      return w ? 1 : 0;
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace poslin

#endif  // POSLIN_CLI_HPP

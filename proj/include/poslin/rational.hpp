#ifndef POSLIN_RATIONAL_HPP
#define POSLIN_RATIONAL_HPP

// Exact rational scalars. Everything numeric in the library goes through
// this type; doubles only ever appear in display strings.

#include <gmpxx.h>

#include <cstdio>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace poslin {

/// Canonical arbitrary-precision rational (denominator > 0, reduced).
/// mpq_class canonicalizes the result of every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& x) { return sgn(x); }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// Parses "p/q" or "p". Decimal notation is rejected.
inline std::optional<Rational> parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
  std::string s(text);
  if (!std::regex_match(s, pattern)) return std::nullopt;
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) return std::nullopt;
  if (r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

/// Exact "p/q" (or "p" when integral).
inline std::string to_string(const Rational& x) { return x.get_str(10); }

/// 15-significant-digit approximation, for display only.
inline std::string to_approx(const Rational& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x.get_d());
  return buf;
}

}  // namespace poslin

#endif  // POSLIN_RATIONAL_HPP

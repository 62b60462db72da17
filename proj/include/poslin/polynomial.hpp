#ifndef POSLIN_POLYNOMIAL_HPP
#define POSLIN_POLYNOMIAL_HPP

#include "poslin/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace poslin {

/// Dense univariate polynomial over Q. coeffs()[i] multiplies x^i; the
/// leading coefficient is nonzero, and the zero polynomial has no
/// coefficients at all.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  RationalPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static RationalPolynomial constant(const Rational& c) { return RationalPolynomial({c}); }
  /// x - root
  static RationalPolynomial linear_factor(const Rational& root) { return RationalPolynomial({-root, Rational(1)}); }
  static RationalPolynomial monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return RationalPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  RationalPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return RationalPolynomial(std::move(d));
  }

  RationalPolynomial& operator+=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  RationalPolynomial& operator-=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  RationalPolynomial& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
  friend RationalPolynomial operator*(const Rational& c, RationalPolynomial a) { return a *= c; }
  friend RationalPolynomial operator-(RationalPolynomial a) { return a *= Rational(-1); }

  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RationalPolynomial(std::move(out));
  }
  RationalPolynomial& operator*=(const RationalPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num,
                                                                  const RationalPolynomial& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {RationalPolynomial{}, num};
    std::vector<Rational> rem = num.coeffs_;
    std::vector<Rational> quot(num.coeffs_.size() - den.coeffs_.size() + 1);
    const std::size_t dd = den.coeffs_.size() - 1;
    for (std::size_t i = quot.size(); i-- > 0;) {
      Rational c = rem[i + dd] / den.coeffs_.back();
      quot[i] = c;
      if (sgn(c) == 0) continue;
      for (std::size_t k = 0; k <= dd; ++k) rem[i + k] -= c * den.coeffs_[k];
    }
    rem.resize(dd);
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
  }

  /// Same polynomial scaled so the leading coefficient is 1.
  RationalPolynomial monic() const {
    if (is_zero()) return {};
    Rational inv = 1 / coeffs_.back();
    return *this * inv;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor.
inline RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline RationalPolynomial square_free_part(const RationalPolynomial& p) {
  if (p.degree() <= 0) return p;
  RationalPolynomial g = gcd(p, p.derivative());
  return divmod(p, g).first;
}

/// Sturm chain p, p', -rem(...), ... with each member rescaled by a
/// positive constant (sign-preserving) to keep coefficients small.
inline std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq;
  if (p.is_zero()) return seq;
  auto normalize = [](RationalPolynomial q) {
    Rational lead = abs(q.leading());
    return q * Rational(1 / lead);
  };
  seq.push_back(normalize(p));
  RationalPolynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(normalize(d));
  while (true) {
    RationalPolynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(normalize(-r));
  }
  return seq;
}

inline int sign_variations(std::span<const RationalPolynomial> seq, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Number of distinct real roots of p in the half-open interval (lo, hi]:
/// a root at lo is excluded, a root at hi is included.
inline unsigned count_real_roots(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("indeterminate root count");
  if (!(lo < hi)) throw std::domain_error("count_real_roots requires lo < hi");
  if (p.degree() == 0) return 0;
  auto seq = sturm_sequence(square_free_part(p));
  return static_cast<unsigned>(sign_variations(seq, lo) - sign_variations(seq, hi));
}

}  // namespace poslin

#endif  // POSLIN_POLYNOMIAL_HPP

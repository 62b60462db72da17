#ifndef POSLIN_COEFF_VECTOR_HPP
#define POSLIN_COEFF_VECTOR_HPP

#include "poslin/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace poslin {

enum class Family {
  jacobi,       // R_n^(alpha, beta)
  jacobi_plus,  // R_n^(alpha, beta + 1)
  gencheb,      // T_n^(alpha, beta)
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::jacobi: return "jacobi";
    case Family::jacobi_plus: return "jacobi-plus";
    case Family::gencheb: return "gencheb";
  }
  return "?";
}

/// Linearization coefficients g(m, n; k) of P_m * P_n, for k = |m-n| ... m+n.
class CoeffVector {
 public:
  CoeffVector(unsigned m, unsigned n, Family family, std::vector<Rational> values)
      : m_(m), n_(n), family_(family), values_(std::move(values)) {
    if (values_.size() != size_for(m, n)) throw std::logic_error("coefficient vector has wrong length");
  }

  static std::size_t size_for(unsigned m, unsigned n) { return 2 * std::min(m, n) + 1; }

  unsigned m() const { return m_; }
  unsigned n() const { return n_; }
  Family family() const { return family_; }
  unsigned k_min() const { return m_ > n_ ? m_ - n_ : n_ - m_; }
  unsigned k_max() const { return m_ + n_; }
  bool in_range(unsigned k) const { return k >= k_min() && k <= k_max(); }

  /// g(m, n; k); k must lie in [k_min, k_max].
  const Rational& at(unsigned k) const {
    if (!in_range(k)) throw std::out_of_range("linearization index outside |m-n| .. m+n");
    return values_[k - k_min()];
  }
  /// g(m, n; k), or 0 outside the support.
  Rational get(unsigned k) const { return in_range(k) ? values_[k - k_min()] : Rational(0); }

  const std::vector<Rational>& values() const { return values_; }

  Rational sum() const {
    Rational s = 0;
    for (const auto& v : values_) s += v;
    return s;
  }

  friend bool operator==(const CoeffVector& x, const CoeffVector& y) {
    return x.m_ == y.m_ && x.n_ == y.n_ && x.family_ == y.family_ && x.values_ == y.values_;
  }

 private:
  unsigned m_, n_;
  Family family_;
  std::vector<Rational> values_;
};

}  // namespace poslin

#endif  // POSLIN_COEFF_VECTOR_HPP

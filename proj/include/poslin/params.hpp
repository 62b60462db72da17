#ifndef POSLIN_PARAMS_HPP
#define POSLIN_PARAMS_HPP

#include "poslin/rational.hpp"

#include <stdexcept>
#include <string_view>

namespace poslin {

/// Jacobi parameters (alpha, beta) in (-1, inf)^2 together with the derived
/// coordinates a = alpha + beta + 1 and b = alpha - beta. Only constructible
/// through make_params, so every instance is validated.
class JacobiParams {
 public:
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// (alpha, beta + 1), i.e. (a, b) -> (a + 1, b - 1).
  JacobiParams plus() const { return JacobiParams(alpha_, beta_ + 1); }
  /// (beta, alpha).
  JacobiParams swapped() const { return JacobiParams(beta_, alpha_); }

  friend bool operator==(const JacobiParams& x, const JacobiParams& y) {
    return x.alpha_ == y.alpha_ && x.beta_ == y.beta_;
  }

 private:
  JacobiParams(Rational alpha, Rational beta)
      : alpha_(std::move(alpha)), beta_(std::move(beta)), a_(alpha_ + beta_ + 1), b_(alpha_ - beta_) {}
  friend JacobiParams make_params(const Rational& alpha, const Rational& beta);

  Rational alpha_, beta_, a_, b_;
};

inline JacobiParams make_params(const Rational& alpha, const Rational& beta) {
  if (alpha <= -1 || beta <= -1) throw std::domain_error("parameters out of positive-definite range");
  return JacobiParams(alpha, beta);
}

/// Same point, specified in (a, b) coordinates.
inline JacobiParams make_params_ab(const Rational& a, const Rational& b) {
  return make_params(Rational((a + b - 1) / 2), Rational((a - b - 1) / 2));
}

enum class RegionLabel {
  delta_interior,    // a > 0, b > 0
  delta_boundary,    // in Delta, not its interior
  v_interior_only,   // in V interior, outside Delta
  v_boundary,        // in V \ V interior, outside Delta
  vprime_minus_v,
  outside_vprime,
};

inline std::string_view label_text(RegionLabel l) {
  switch (l) {
    case RegionLabel::delta_interior: return "Δ°";
    case RegionLabel::delta_boundary: return "∂Δ∩V";
    case RegionLabel::v_interior_only: return "V°\\Δ";
    case RegionLabel::v_boundary: return "∂V";
    case RegionLabel::vprime_minus_v: return "V′\\V";
    case RegionLabel::outside_vprime: return "outside V′";
  }
  return "?";
}

inline std::string_view label_id(RegionLabel l) {
  switch (l) {
    case RegionLabel::delta_interior: return "delta_interior";
    case RegionLabel::delta_boundary: return "delta_boundary";
    case RegionLabel::v_interior_only: return "v_interior_minus_delta";
    case RegionLabel::v_boundary: return "v_boundary";
    case RegionLabel::vprime_minus_v: return "vprime_minus_v";
    case RegionLabel::outside_vprime: return "outside_vprime";
  }
  return "?";
}

struct RegionReport {
  bool in_Delta = false;
  bool in_Delta_interior = false;
  bool in_V = false;
  bool in_V_interior = false;
  bool in_Vprime = false;
  /// a > -11/8 + sqrt(73)/8, decided exactly as 4a^2 + 11a + 3 > 0.
  bool above_iota_threshold = false;
  /// 4a^2 + 11a + 3 == 0: the threshold itself, where zero-count behavior is
  /// left undecided.
  bool on_iota_threshold = false;
  RegionLabel label = RegionLabel::outside_vprime;
};

/// (a^2 + 2b^2 + 3a)(a+3)(a+5) - 3(a+1)(a+2)b^2; V is {b >= 0, this >= 0}.
inline Rational v_discriminant(const Rational& a, const Rational& b) {
  Rational b2 = b * b;
  return (a * a + 2 * b2 + 3 * a) * (a + 3) * (a + 5) - 3 * (a + 1) * (a + 2) * b2;
}

/// a^2 + 2b^2 + 3a; V' is {b >= 0, this >= 0}.
inline Rational vprime_form(const Rational& a, const Rational& b) { return a * a + 2 * b * b + 3 * a; }

inline RegionReport classify_region(const JacobiParams& p) {
  const Rational& a = p.a();
  const Rational& b = p.b();
  const int sb = sgn(b);
  const int sv = sgn(v_discriminant(a, b));
  const int threshold = sgn(Rational(4 * a * a + 11 * a + 3));

  RegionReport r;
  r.in_Delta = sgn(a) >= 0 && sb >= 0;
  r.in_Delta_interior = sgn(a) > 0 && sb > 0;
  r.in_V = sb >= 0 && sv >= 0;
  r.in_V_interior = sb > 0 && sv > 0;
  r.in_Vprime = sb >= 0 && sgn(vprime_form(a, b)) >= 0;
  r.above_iota_threshold = threshold > 0;
  r.on_iota_threshold = threshold == 0;

  if (r.in_Delta_interior) r.label = RegionLabel::delta_interior;
  else if (r.in_Delta) r.label = RegionLabel::delta_boundary;
  else if (r.in_V_interior) r.label = RegionLabel::v_interior_only;
  else if (r.in_V) r.label = RegionLabel::v_boundary;
  else if (r.in_Vprime) r.label = RegionLabel::vprime_minus_v;
  else r.label = RegionLabel::outside_vprime;
  return r;
}

}  // namespace poslin

#endif  // POSLIN_PARAMS_HPP

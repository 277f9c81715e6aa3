#pragma once

#include "freud/precision.hpp"

#include <string>

namespace freud {

/// Parameters of the weight |x|^(2 sigma + 1) exp(-[c x^6 + t (x^4 - x^2)]).
///
/// Construct through `make` so the values are parsed at the working precision
/// of `ctx`. Requires c > 0 and sigma > -1/2; sigma <= 0 is accepted with
/// `sigma_warning()` set.
struct WeightParams {
  Real c;
  Real t;
  Real sigma;
  PrecisionContext ctx;

  static WeightParams make(const std::string& c, const std::string& t, const std::string& sigma,
                           const PrecisionContext& ctx = PrecisionContext());
  static WeightParams make(const Real& c, const Real& t, const Real& sigma,
                           const PrecisionContext& ctx = PrecisionContext());

  WeightParams with_t(const Real& new_t) const;
  WeightParams with_sigma(const Real& new_sigma) const;
  WeightParams with_ctx(const PrecisionContext& new_ctx) const;

  /// 2 sigma + 1, the exponent of |x|.
  Real alpha() const { return 2 * sigma + 1; }
  bool sigma_warning() const { return !(sigma > 0); }

  void validate() const;
};

/// W(x) = |x|^(2 sigma + 1) exp(-[c x^6 + t (x^4 - x^2)]); even in x, zero at x = 0.
Real weight_eval(const WeightParams& p, const Real& x);

/// v(x) = -ln W(x) for x != 0.
Real potential_v(const WeightParams& p, const Real& x);
/// v'(x) = -(2 sigma + 1)/x + 6 c x^5 + t (4 x^3 - 2 x) for x != 0.
Real potential_v_prime(const WeightParams& p, const Real& x);

/// v0'(x), the polynomial part of v'(x).
Real potential_v0_prime(const WeightParams& p, const Real& x);

enum class AiryWeight { w1, w2 };

/// Half-line weights obtained from W by xi = x^2:
/// w1(xi) = xi^sigma e^{-[c xi^3 + t (xi^2 - xi)]}, w2(xi) = xi * w1(xi).
Real airy_weight(const WeightParams& p, AiryWeight which, const Real& xi);

std::string to_string(AiryWeight which);

}  // namespace freud

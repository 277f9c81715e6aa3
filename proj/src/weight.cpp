#include "freud/weight.hpp"

#include "freud/errors.hpp"

namespace freud {

WeightParams WeightParams::make(const std::string& c, const std::string& t, const std::string& sigma,
                                const PrecisionContext& ctx) {
  ctx.validate();
  WorkingPrecision scope(ctx);
  WeightParams p{parse_real(c), parse_real(t), parse_real(sigma), ctx};
  p.validate();
  return p;
}

WeightParams WeightParams::make(const Real& c, const Real& t, const Real& sigma,
                                const PrecisionContext& ctx) {
  ctx.validate();
  WorkingPrecision scope(ctx);
  WeightParams p{at_working_precision(c), at_working_precision(t), at_working_precision(sigma), ctx};
  p.validate();
  return p;
}

WeightParams WeightParams::with_t(const Real& new_t) const {
  WorkingPrecision scope(ctx);
  WeightParams out = *this;
  out.t = at_working_precision(new_t);
  return out;
}

WeightParams WeightParams::with_sigma(const Real& new_sigma) const {
  WorkingPrecision scope(ctx);
  WeightParams out = *this;
  out.sigma = at_working_precision(new_sigma);
  out.validate();
  return out;
}

WeightParams WeightParams::with_ctx(const PrecisionContext& new_ctx) const {
  new_ctx.validate();
  WorkingPrecision scope(new_ctx);
  return WeightParams{at_working_precision(c), at_working_precision(t), at_working_precision(sigma),
                      new_ctx};
}

void WeightParams::validate() const {
  if (!(c > 0)) throw PreconditionError("weight: c must be positive");
  if (!(sigma > Real(-1) / 2)) throw PreconditionError("weight: sigma must exceed -1/2");
}

namespace {

Real exponent_part(const WeightParams& p, const Real& x) {
  const Real x2 = x * x;
  const Real x4 = x2 * x2;
  return p.c * x4 * x2 + p.t * (x4 - x2);
}

}  // namespace

Real weight_eval(const WeightParams& p, const Real& x_in) {
  WorkingPrecision scope(p.ctx);
  const Real x = at_working_precision(x_in);
  if (x == 0) return Real(0);
  return pow(abs(x), p.alpha()) * exp(-exponent_part(p, x));
}

Real potential_v(const WeightParams& p, const Real& x_in) {
  WorkingPrecision scope(p.ctx);
  const Real x = at_working_precision(x_in);
  if (x == 0) throw SingularityError("potential_v: singular at x = 0");
  return -p.alpha() * log(abs(x)) + exponent_part(p, x);
}

Real potential_v_prime(const WeightParams& p, const Real& x_in) {
  WorkingPrecision scope(p.ctx);
  const Real x = at_working_precision(x_in);
  if (x == 0) throw SingularityError("potential_v_prime: singular at x = 0");
  return -p.alpha() / x + potential_v0_prime(p, x);
}

Real potential_v0_prime(const WeightParams& p, const Real& x_in) {
  WorkingPrecision scope(p.ctx);
  const Real x = at_working_precision(x_in);
  const Real x2 = x * x;
  return 6 * p.c * x2 * x2 * x + p.t * (4 * x2 * x - 2 * x);
}

Real airy_weight(const WeightParams& p, AiryWeight which, const Real& xi_in) {
  WorkingPrecision scope(p.ctx);
  const Real xi = at_working_precision(xi_in);
  if (!(xi > 0)) throw DomainError("airy_weight: xi must be positive");
  const Real xi2 = xi * xi;
  const Real e = exp(-(p.c * xi2 * xi + p.t * (xi2 - xi)));
  const Real power = which == AiryWeight::w1 ? p.sigma : Real(p.sigma + 1);
  return pow(xi, power) * e;
}

std::string to_string(AiryWeight which) { return which == AiryWeight::w1 ? "w1" : "w2"; }

}  // namespace freud

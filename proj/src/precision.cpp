#include "freud/precision.hpp"

#include "freud/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace freud {

PrecisionContext::PrecisionContext(int digits_, int guard)
    : digits(digits_),
      guard_digits(guard),
      tol_identity_exp(-digits_ / 2.0),
      tol_quadrature_exp(-digits_ + 10.0) {}

int PrecisionContext::guard() const {
  if (guard_digits >= 0) return guard_digits;
  return std::max(20, digits / 2);
}

Real PrecisionContext::tol_identity() const { return pow10(tol_identity_exp); }
Real PrecisionContext::tol_quadrature() const { return pow10(tol_quadrature_exp); }
Real PrecisionContext::fd_step() const { return pow10(-digits / 4.0); }
Real PrecisionContext::tol_electro() const { return pow10(-digits / 4.0); }

PrecisionContext PrecisionContext::raised(int extra_digits) const {
  PrecisionContext out = *this;
  out.guard_digits = guard() + extra_digits;
  return out;
}

void PrecisionContext::validate() const {
  if (digits < 30) throw PreconditionError("precision: digits must be >= 30");
  if (!(tol_quadrature_exp < tol_identity_exp && tol_identity_exp < 0.0))
    throw PreconditionError("precision: require 0 < tol_quadrature < tol_identity < 1");
}

WorkingPrecision::WorkingPrecision(const PrecisionContext& ctx)
    : WorkingPrecision(static_cast<unsigned>(ctx.working_digits())) {}

WorkingPrecision::WorkingPrecision(unsigned decimal_digits) : saved_(Real::default_precision()) {
  Real::default_precision(decimal_digits);
}

WorkingPrecision::~WorkingPrecision() { Real::default_precision(saved_); }

Real at_working_precision(const Real& x) { return Real(x, Real::default_precision()); }

Real parse_real(const std::string& text) {
  try {
    return Real(text);
  } catch (const std::exception&) {
    throw PreconditionError("not a real number: '" + text + "'");
  }
}

Real pow10(double exponent) {
  if (exponent == std::floor(exponent)) {
    return boost::multiprecision::pow(Real(10), static_cast<long>(exponent));
  }
  return boost::multiprecision::pow(Real(10), Real(exponent));
}

std::string format_real(const Real& x, int digits) {
  if (x == 0) return "0";
  // The scientific precision counts digits after the leading one.
  return x.str(std::max(digits, 1) - 1, std::ios_base::scientific);
}

int decimal_exponent(const Real& x) {
  if (x == 0) return std::numeric_limits<int>::min();
  return static_cast<int>(std::floor(static_cast<double>(boost::multiprecision::log10(abs(x)))));
}

}  // namespace freud

#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace freud {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                          boost::multiprecision::et_off>;

/// Working-precision policy shared by every computation.
///
/// `digits` is the target accuracy; tolerances are derived from it. Arithmetic
/// runs at `working_digits()`, which adds guard digits to absorb the
/// cancellation in moment sums and Hankel-type eliminations.
struct PrecisionContext {
  int digits = 120;
  int guard_digits = -1;  // < 0 selects the default guard
  double tol_identity_exp = 0.0;    // tol_identity = 10^tol_identity_exp
  double tol_quadrature_exp = 0.0;  // tol_quadrature = 10^tol_quadrature_exp

  PrecisionContext() : PrecisionContext(120) {}
  explicit PrecisionContext(int digits_, int guard = -1);

  int guard() const;
  int working_digits() const { return digits + guard(); }

  Real tol_identity() const;
  Real tol_quadrature() const;
  /// Finite-difference step used by the t-derivative checks, 10^(-digits/4).
  Real fd_step() const;
  /// Electrostatic residual tolerance, 10^(-digits/4).
  Real tol_electro() const;

  PrecisionContext raised(int extra_digits) const;

  void validate() const;
};

/// Sets the process-wide MPFR default precision for its lifetime.
///
/// Values created while a scope is active carry its precision. Copies and
/// assignments keep the precision of their source and arithmetic takes the
/// larger operand precision, so caller-supplied values go through
/// `at_working_precision` first.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(const PrecisionContext& ctx);
  explicit WorkingPrecision(unsigned decimal_digits);
  ~WorkingPrecision();

  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  unsigned saved_;
};

/// Copy `x` into a value with the currently active precision.
Real at_working_precision(const Real& x);

Real parse_real(const std::string& text);
Real pow10(double exponent);

/// Locale-independent scientific rendering with `digits` significant digits.
/// Exact zero renders as "0".
std::string format_real(const Real& x, int digits);

int decimal_exponent(const Real& x);

}  // namespace freud

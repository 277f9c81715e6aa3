#pragma once

#include "freud/precision.hpp"
#include "freud/report.hpp"
#include "freud/weight.hpp"

#include <optional>
#include <string>
#include <vector>

namespace freud {

enum class MomentMethod { series, quadrature };

std::string to_string(MomentMethod m);

/// Even moments eta_{2k}(t; sigma) = integral of x^{2k} W(x) over R, k = 0..K.
/// Odd moments vanish by parity and are not stored.
struct MomentTable {
  WeightParams params;
  std::vector<Real> values;
  MomentMethod method = MomentMethod::series;
  /// Estimated absolute error bound of the least accurate entry, relative to it.
  Real est_error = 0;

  int max_k() const { return static_cast<int>(values.size()) - 1; }
  /// Moment of order `order` (any parity); odd orders return exactly zero.
  Real eta(int order) const;
};

MomentTable moment_table(const WeightParams& p, int max_k, MomentMethod method = MomentMethod::series);

/// eta_{2k} by the exact t-series of Gamma integrals, extended until the
/// tail bound drops below tol_quadrature. `min_terms` forces a minimum length.
Real moment_series(const WeightParams& p, int k, int min_terms = 0);

/// eta_{2k} by tanh-sinh panel quadrature of 2 * int_0^X x^{2k} W(x) dx.
Real moment_quadrature(const WeightParams& p, int k);

/// Half-line moment int_0^inf xi^{i+j} w(xi) d xi of the symmetrized weights.
Real airy_moment(const WeightParams& p, int i, int j, AiryWeight which,
                 MomentMethod method = MomentMethod::quadrature);

/// All half-line moments of one weight, orders 0..max_order, sharing nodes.
std::vector<Real> airy_moment_table(const WeightParams& p, int max_order, AiryWeight which,
                                    MomentMethod method = MomentMethod::quadrature);

/// Series vs quadrature for k = 0..max_k, relative to the series value.
VerificationReport check_moment_agreement(const WeightParams& p, int max_k);

/// eta_{2k}(t; sigma) against eta_0(t; sigma + k).
VerificationReport check_shift_identity(const WeightParams& p, int k,
                                        MomentMethod method = MomentMethod::series);

/// Central finite difference of d^n eta_0 / dt^n (n = 1..3) against
/// sum_k (-1)^{n+k} C(n,k) eta_{4n-2k}. `h` defaults to 10^(-digits/4).
VerificationReport check_derivative_identity(const WeightParams& p, int n,
                                             MomentMethod method = MomentMethod::series,
                                             std::optional<Real> h = std::nullopt);

/// Truncation point X of the quadrature: c X^6 - |t| X^4 - p ln X exceeds
/// (digits + 20) ln 10 where p is the largest power of x in the integrand.
double quadrature_cutoff(const WeightParams& p, double max_power);

}  // namespace freud

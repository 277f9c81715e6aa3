#pragma once

#include "freud/numerics.hpp"
#include "freud/recurrence.hpp"
#include "freud/report.hpp"

#include <map>
#include <vector>

namespace freud {

/// A_n(x) = 6c x^4 + [6c(gamma_n + gamma_{n+1}) + 4t] x^2
///          + 6c(Xi_n + Xi_{n+1}) + 4t(gamma_n + gamma_{n+1}) - 2t,
/// B_n(x) = 6c gamma_n x^3 + (6c Xi_n + 4t gamma_n) x + (2 sigma + 1) Omega_n / x.
struct LadderCoeffs {
  int n = 0;
  Poly A_poly;
  Poly B_poly;      // polynomial part of B_n
  Real B_singular;  // coefficient of 1/x

  Real A(const Real& x) const { return A_poly(x); }
  Real A_prime(const Real& x) const { return A_poly.derivative()(x); }
  Real B(const Real& x) const;
  Real B_prime(const Real& x) const;
};

/// Needs gamma_{n+2}; n = 0 is accepted so that sums over A_j can start at j = 0.
LadderCoeffs ladder_coeffs(const RecurrenceTable& table, int n);

/// {+-0.3, +-0.9, +-1.7}
std::vector<Real> ladder_grid();
/// {+-0.4, +-1.1, +-2.0}
std::vector<Real> ode_grid();

/// S_n' = gamma_n A_n S_{n-1} - B_n S_n pointwise.
VerificationReport check_lowering(const RecurrenceTable& table, int n, const std::vector<Real>& xgrid);

/// B_n + B_{n+1} = -v' + x A_n, compared coefficient by coefficient.
VerificationReport check_M1(const RecurrenceTable& table, int n);

/// A_n = v0'/x + (B_n + B_{n+1})/x - (2 sigma + 1)/x^2 pointwise.
VerificationReport check_AnBn_lemma(const RecurrenceTable& table, int n, const std::vector<Real>& xgrid);

/// v' B_n + sum_{j<n} A_j + B_n^2 = gamma_n A_n A_{n-1} pointwise.
VerificationReport check_M2prime(const RecurrenceTable& table, int n, const std::vector<Real>& xgrid);

struct OdeCoeffsAt {
  Real x;
  Real U;
  Real W;
};

/// U = -v' - A_n'/A_n, W = -B_n [v' + B_n + A_n'/A_n] + gamma_n A_n A_{n-1} + B_n'.
OdeCoeffsAt ode_coeffs(const RecurrenceTable& table, int n, const Real& x);

/// W evaluated from its fully expanded printed form, term by term.
Real ode_W_expanded(const RecurrenceTable& table, int n, const Real& x);
/// U evaluated from its fully expanded printed form.
Real ode_U_expanded(const RecurrenceTable& table, int n, const Real& x);

/// S_n'' + U S_n' + W S_n = 0 on the grid; for odd n also at x = +-1e-3; and
/// the same residual with the zeroth-order coefficient B' - B A'/A + sum_{j<n} A_j.
VerificationReport check_ode(const RecurrenceTable& table, int n, const std::vector<Real>& xgrid);

/// Informational: expanded-text U, W against the compact forms.
VerificationReport check_ode_expanded(const RecurrenceTable& table, int n, const std::vector<Real>& xgrid);

/// Coefficients of x S_n' = sum_{k=n-6}^{n} u[k] S_k.
struct QuasiCoeffs {
  int n = 0;
  std::map<int, Real> u;

  Real at(int k) const;
};

/// Requires 6 <= n <= N-4.
QuasiCoeffs quasi_coeffs(const RecurrenceTable& table, int n);

/// The u[n-4] and u[n-2] expressions exactly as printed alongside the
/// projection formula; they differ from the expansion of x^6 S_n, x^4 S_n.
QuasiCoeffs quasi_coeffs_printed(const RecurrenceTable& table, int n);

/// (a) x S_n' - sum u[k] S_k vanishes coefficient-wise and on `xgrid`;
/// (b) every u[k] matches <x S_n', S_k> / Gamma_hat_k from moments, and the
///     projections onto S_k for k < n-6 vanish.
VerificationReport check_quasi(const RecurrenceTable& table, int n, const std::vector<Real>& xgrid = ladder_grid());

/// Informational: printed u[n-4], u[n-2] against the projections.
VerificationReport check_quasi_printed(const RecurrenceTable& table, int n);

}  // namespace freud

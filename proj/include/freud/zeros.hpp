#pragma once

#include "freud/recurrence.hpp"
#include "freud/report.hpp"

#include <optional>
#include <vector>

namespace freud {

/// Zeros of S_n, ascending. Pairs are exactly +-x and the middle zero of odd n is exactly 0.
struct ZeroSet {
  int n = 0;
  std::vector<Real> zeros;
  GammaMethod gamma_source = GammaMethod::stieltjes;
  /// max |lambda_i + lambda_{n-1-i}| over the raw eigenvalues, before pairing.
  Real pairing_defect = 0;
};

/// Eigenvalues of the zero-diagonal Jacobi matrix with off-diagonal sqrt(gamma_k),
/// paired, then refined by one Newton step on S_n.
ZeroSet compute_zeros(const RecurrenceTable& table, int n);

/// Simplicity, symmetry, raw eigenvalue pairing and |S_n(x_j)| <= tol (1 + |x_j|)^n.
VerificationReport check_zero_properties(const RecurrenceTable& table, int n);

/// Zeros of S_{n-1} strictly interlace those of S_n.
VerificationReport check_interlacing(const RecurrenceTable& table, int n);

/// 2 sum_{k != j} 1/(x_j - x_k) + U_n(x_j) at every nonzero zero, against tol_electro.
VerificationReport electrostatic_residual(const RecurrenceTable& table, int n);

/// Same residuals, one per zero in `zs` order; empty at the origin and where A_n vanishes.
std::vector<std::optional<Real>> electrostatic_values(const RecurrenceTable& table, const ZeroSet& zs);

}  // namespace freud

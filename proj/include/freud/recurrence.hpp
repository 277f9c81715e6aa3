#pragma once

#include "freud/moments.hpp"
#include "freud/precision.hpp"
#include "freud/report.hpp"
#include "freud/weight.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freud {

enum class GammaMethod { stieltjes, hankel, string };

std::string to_string(GammaMethod m);
GammaMethod parse_gamma_method(const std::string& name);

/// Recurrence coefficients of S_{n+1} = x S_n - gamma_n S_{n-1} for n = 0..N,
/// with squared norms Gamma_hat_n = gamma_n Gamma_hat_{n-1}.
///
/// gamma_0 = 0 and gamma_n > 0 for n >= 1. The diagonal recurrence
/// coefficient is identically zero for this even weight and is not stored.
struct RecurrenceTable {
  WeightParams params;
  std::vector<Real> gammas;
  std::vector<Real> norms;
  GammaMethod method = GammaMethod::stieltjes;
  /// Decimal digits lost to cancellation while forming Gamma_hat_n.
  std::vector<double> condition_digits;
  /// String route only: relative distance from the Stieltjes values, and the
  /// largest n up to which every gamma_k agrees within tol_identity.
  std::vector<Real> divergence;
  std::optional<int> agreement_window;

  int max_n() const { return static_cast<int>(gammas.size()) - 1; }
  /// gamma_n; indices below zero read as 0, indices above N throw RangeError.
  Real gamma(int n) const;
  Real norm(int n) const;
  /// Xi_n = gamma_n (gamma_{n-1} + gamma_n + gamma_{n+1}); needs n + 1 <= N.
  Real xi(int n) const;
  /// Omega_n = (1 - (-1)^n) / 2.
  static int omega(int n) { return ((n % 2) + 2) % 2; }
};

/// Moment-based Stieltjes procedure; the authoritative gamma source.
RecurrenceTable gamma_stieltjes(const WeightParams& p, int max_n);

/// eta_2 / eta_0.
Real gamma_initial(const WeightParams& p);

/// gamma_n = Delta_{n+1} Delta_{n-1} / Delta_n^2 with the Hankel minors
/// Delta factored through the even-moment matrices.
RecurrenceTable gamma_hankel(const WeightParams& p, int max_n);

/// Forward solve of the string equation from (gamma_1, gamma_2). When
/// `reference` is given, divergence and agreement window are recorded.
RecurrenceTable gamma_string_recursion(const WeightParams& p, int max_n, std::pair<Real, Real> seed,
                                       const RecurrenceTable* reference = nullptr);
/// Same, seeded from the moments and measured against the Stieltjes table.
RecurrenceTable gamma_string_recursion(const WeightParams& p, int max_n);

RecurrenceTable compute_gammas(const WeightParams& p, int max_n, GammaMethod method);

/// 6c[gamma_n (Xi_{n-1} + Xi_n + Xi_{n+1}) + gamma_{n-1} gamma_n gamma_{n+1}] + 4t Xi_n - 2t gamma_n.
Real string_lhs(const RecurrenceTable& table, int n);
/// The same quantity grouped as
/// 6c[(gamma_n + gamma_{n-1}) Xi_n + gamma_n Xi_{n+1} + gamma_n gamma_{n-1} gamma_{n-2}]
///   + 4t gamma_n (gamma_{n-1} + gamma_n + gamma_{n+1}) - 2t gamma_n.
Real string_lhs_regrouped(const RecurrenceTable& table, int n);

/// String equation residual at n, normalized by n + 2 sigma + 1; requires 1 <= n <= N-2.
VerificationReport check_string_equation(const RecurrenceTable& table, int n);
VerificationReport check_string_equation_range(const RecurrenceTable& table, int n_first, int n_last);

/// Stieltjes vs Hankel gamma_n, relative, for 1 <= n <= max_n.
VerificationReport check_cross_method(const WeightParams& p, int max_n);

/// Toda-type flow: central difference of gamma_n(t) against
/// gamma_n [(gamma_{n+1} - Xi_{n+1}) - (gamma_{n-1} - Xi_{n-1})].
VerificationReport check_toda(const WeightParams& p, int n, std::optional<Real> h = std::nullopt);
/// Same for every n in 1..n_max, sharing the three tables.
VerificationReport check_toda_range(const WeightParams& p, int n_max, std::optional<Real> h = std::nullopt);

/// Right-hand side of the second-order differential-recurrence relation,
/// transcribed term by term; needs gamma_{n-4}..gamma_{n+4}.
Real dde2_rhs(const RecurrenceTable& table, int n);

/// Informational: compares dde2_rhs with the second t-derivative, the first
/// t-derivative and the t-derivative of gamma_n^2. Never gating.
VerificationReport check_second_order_dde(const WeightParams& p, int n, std::optional<Real> h = std::nullopt);
VerificationReport check_second_order_dde_range(const WeightParams& p, int n_max,
                                                std::optional<Real> h = std::nullopt);

}  // namespace freud

#pragma once

#include "freud/moments.hpp"
#include "freud/numerics.hpp"
#include "freud/recurrence.hpp"
#include "freud/report.hpp"

#include <vector>

namespace freud {

enum class Parity { even, odd };

/// Monic S_n in the monomial basis. Only coefficients of x^{n-2k} are nonzero.
struct PolynomialRep {
  int n = 0;
  Poly coeffs;
  Parity parity = Parity::even;

  Real operator()(const Real& x) const { return coeffs(x); }
};

/// S_n from S_{n+1} = x S_n - gamma_n S_{n-1}, S_0 = 1, S_1 = x.
PolynomialRep build_Sn(const RecurrenceTable& table, int n);
/// S_0..S_n in one pass.
std::vector<Poly> build_S_family(const RecurrenceTable& table, int n);

/// chi(n) = -sum_{k<n} gamma_k, the x^{n-2} coefficient of S_n; chi(0) = 0.
Real chi(const RecurrenceTable& table, int n);

/// Psi_k(q) from Psi_k(q+1) - Psi_k(q) = -gamma_q Psi_{k-1}(q-1), Psi_0 = 1.
Real psi_coeff(const RecurrenceTable& table, int k, int q);

/// Where the outermost summation index of the nested closed form starts.
enum class IndexBase { zero, one };

/// Psi_k(q) = (-1)^k sum gamma_{j_1} ... gamma_{j_k} over
/// j_1 >= base, j_{i+1} >= j_i + 2, j_i <= q + 2i - 1 - 2k.
Real psi_closed_form(const RecurrenceTable& table, int k, int q, IndexBase base);

/// Recursion, closed form (both index bases) and coefficient extraction for q <= q_max.
VerificationReport check_psi_forms(const RecurrenceTable& table, int q_max);

/// Enumerates W(q, r) and compares with the coefficients of S_q; q <= 12.
VerificationReport check_wqr_form(const RecurrenceTable& table, int q);

/// Gamma_hat_n = sum_k Psi_k(n) eta_{2n-2k}.
Real norm_Gamma(const RecurrenceTable& table, int n);
/// norm_Gamma against the stored inner-product norms, n = 0..n_max.
VerificationReport check_norms(const RecurrenceTable& table, int n_max);

/// P~_m(xi) from S_2m(x) = P~_m(x^2), P^_m(xi) from S_{2m+1}(x) = x P^_m(x^2).
struct SymmetrizedPair {
  int m = 0;
  Poly ptilde;
  Poly phat;
  Real h_tilde;  // Gamma_hat_{2m}
  Real h_hat;    // Gamma_hat_{2m+1}
};

SymmetrizedPair symmetrize(const RecurrenceTable& table, int m);

/// <P~_m, xi^j>_{w1} = 0 and <P^_m, xi^j>_{w2} = 0 for j < m, and the norms
/// h~_m, h^_m, all from half-line quadrature moments.
VerificationReport check_symmetrized(const RecurrenceTable& table, int m);

/// Delta_j = prod_{i<j} Gamma_hat_i against D~ D^ from half-line moment
/// determinants, for j = 1..n (n <= 14).
VerificationReport check_hankel_product(const WeightParams& p, int n);

/// <S_n, S_m> = 0 for n != m <= n_max, relative to sqrt(Gamma_hat_n Gamma_hat_m).
VerificationReport check_orthogonality(const RecurrenceTable& table, int n_max);

/// chi(n) equals the extracted coefficient and gamma_n = chi(n) - chi(n+1).
VerificationReport check_telescoping(const RecurrenceTable& table, int n_max);

/// Odd-gap coefficients of S_n vanish exactly and S_n(-x) = (-1)^n S_n(x).
VerificationReport check_parity(const RecurrenceTable& table, int n_max);

}  // namespace freud

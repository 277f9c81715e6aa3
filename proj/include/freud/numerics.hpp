#pragma once

#include "freud/precision.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace freud {

/// Gamma function for real x > 0 at the active working precision.
Real gamma_fn(const Real& x);

/// Dense real polynomial, coefficient i multiplies x^i.
///
/// Trailing zero coefficients are trimmed so the leading coefficient is
/// nonzero; the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Real> coeffs);
  Poly(std::initializer_list<Real> coeffs);

  static Poly monomial(int degree, const Real& coeff = Real(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Real>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero outside the stored range.
  Real coeff(int i) const;
  const Real& leading() const { return coeffs_.back(); }

  Real operator()(const Real& x) const;
  Poly derivative() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Real& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Real& s) { return a *= s; }
  friend Poly operator*(const Real& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);

  /// Multiply by x^k.
  Poly shifted(int k) const;

 private:
  void trim();
  std::vector<Real> coeffs_;
};

Real poly_eval(const Poly& p, const Real& x);
Poly poly_derive(const Poly& p);
Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_add(const Poly& p, const Poly& q);

/// Eigenvalues of the symmetric tridiagonal matrix with the given diagonal and
/// strictly positive off-diagonal, sorted ascending, each to absolute
/// accuracy `tol * max(1, |lambda|)`.
///
/// Uses Sturm-sequence bisection on Gershgorin bounds.
std::vector<Real> tridiag_eigenvalues(std::span<const Real> diag, std::span<const Real> offdiag,
                                      const Real& tol);

/// Number of eigenvalues strictly less than x (Sturm count).
int sturm_count(std::span<const Real> diag, std::span<const Real> offdiag_sq, const Real& x);

}  // namespace freud

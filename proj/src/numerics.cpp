#include "freud/numerics.hpp"

#include "freud/errors.hpp"

#include <algorithm>

namespace freud {

Real gamma_fn(const Real& x) {
  if (!(x > 0)) throw DomainError("gamma_fn: argument must be positive");
  // Dispatches to mpfr_gamma, correctly rounded at the working precision.
  return boost::multiprecision::tgamma(at_working_precision(x));
}

Poly::Poly(std::vector<Real> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Real> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(int degree, const Real& coeff) {
  std::vector<Real> c(static_cast<std::size_t>(degree) + 1, Real(0));
  c.back() = coeff;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Real Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Real(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Real Poly::operator()(const Real& x) const {
  Real acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Real> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Real(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Real(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Real& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Real> out(a.coeffs_.size() + b.coeffs_.size() - 1, Real(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return Poly();
  std::vector<Real> out(static_cast<std::size_t>(k), Real(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(out));
}

Real poly_eval(const Poly& p, const Real& x) { return p(x); }
Poly poly_derive(const Poly& p) { return p.derivative(); }
Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }
Poly poly_add(const Poly& p, const Poly& q) { return p + q; }

int sturm_count(std::span<const Real> diag, std::span<const Real> offdiag_sq, const Real& x) {
  // Signs of the LDL^T pivots of (T - x I); a zero pivot is nudged off zero.
  int count = 0;
  Real q = diag[0] - x;
  const Real tiny = boost::multiprecision::pow(Real(10), -static_cast<long>(Real::default_precision()) - 5);
  for (std::size_t i = 0;; ++i) {
    if (q == 0) q = -tiny;
    if (q < 0) ++count;
    if (i + 1 == diag.size()) break;
    q = diag[i + 1] - x - offdiag_sq[i] / q;
  }
  return count;
}

std::vector<Real> tridiag_eigenvalues(std::span<const Real> diag, std::span<const Real> offdiag,
                                      const Real& tol) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (offdiag.size() + 1 != n)
    throw PreconditionError("tridiag_eigenvalues: offdiag must have len(diag) - 1 entries");
  for (const auto& e : offdiag) {
    if (!(e > 0)) throw PreconditionError("tridiag_eigenvalues: off-diagonal entries must be positive");
  }
  if (n == 1) return {at_working_precision(diag[0])};

  std::vector<Real> esq(offdiag.size());
  for (std::size_t i = 0; i < offdiag.size(); ++i) esq[i] = offdiag[i] * offdiag[i];

  // Gershgorin interval.
  Real lo = diag[0], hi = diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    Real r = 0;
    if (i > 0) r += offdiag[i - 1];
    if (i + 1 < n) r += offdiag[i];
    lo = std::min(lo, Real(diag[i] - r));
    hi = std::max(hi, Real(diag[i] + r));
  }
  const Real pad = (hi - lo) * Real("1e-3") + 1;
  lo -= pad;
  hi += pad;

  std::vector<Real> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k-th smallest eigenvalue: largest x with count(x) <= k.
    Real a = lo, b = hi;
    if (k > 0) a = std::max(a, Real(out[k - 1]));
    while (true) {
      Real mid = (a + b) / 2;
      Real scale = std::max(Real(1), Real(abs(mid)));
      if (b - a <= tol * scale) break;
      if (mid == a || mid == b) break;
      if (static_cast<std::size_t>(sturm_count(diag, esq, mid)) <= k)
        a = mid;
      else
        b = mid;
    }
    out[k] = (a + b) / 2;
  }
  return out;
}

}  // namespace freud

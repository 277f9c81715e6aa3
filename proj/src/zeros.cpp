#include "freud/zeros.hpp"

#include "freud/errors.hpp"
#include "freud/ladder.hpp"
#include "freud/numerics.hpp"
#include "freud/polynomials.hpp"

#include <algorithm>

namespace freud {

ZeroSet compute_zeros(const RecurrenceTable& table, int n) {
  if (n < 0 || n > table.max_n()) throw RangeError("compute_zeros: n outside the table");
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  ZeroSet zs;
  zs.n = n;
  zs.gamma_source = table.method;
  if (n == 0) return zs;

  std::vector<Real> diag(static_cast<std::size_t>(n), Real(0));
  std::vector<Real> off;
  for (int k = 1; k < n; ++k) off.push_back(sqrt(table.gamma(k)));
  const std::vector<Real> lambda = tridiag_eigenvalues(diag, off, p.ctx.tol_quadrature());

  const Poly s = build_Sn(table, n).coeffs;
  const Poly ds = s.derivative();
  zs.zeros.assign(static_cast<std::size_t>(n), Real(0));
  for (int i = 0; i < n / 2; ++i) {
    const Real& lo = lambda[static_cast<std::size_t>(i)];
    const Real& hi = lambda[static_cast<std::size_t>(n - 1 - i)];
    zs.pairing_defect = std::max(zs.pairing_defect, Real(abs(lo + hi)));
    Real x = (hi - lo) / 2;
    x -= s(x) / ds(x);
    zs.zeros[static_cast<std::size_t>(n - 1 - i)] = x;
    zs.zeros[static_cast<std::size_t>(i)] = -x;
  }
  if (n % 2 == 1) zs.pairing_defect = std::max(zs.pairing_defect, Real(abs(lambda[static_cast<std::size_t>(n / 2)]) * 2));
  return zs;
}

VerificationReport check_zero_properties(const RecurrenceTable& table, int n) {
  if (n < 1) throw RangeError("check_zero_properties: n must be at least 1");
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  VerificationReport report("zero_properties", p, p.ctx.tol_identity());
  const ZeroSet zs = compute_zeros(table, n);
  const Poly s = build_Sn(table, n).coeffs;
  const std::string tag = "n=" + std::to_string(n) + " ";

  Real worst = 0;
  for (const auto& x : zs.zeros) worst = std::max(worst, Real(abs(s(x)) / pow(1 + abs(x), n)));
  report.add(tag + "polynomial value", worst);

  Real min_gap = -1;
  for (int i = 1; i < n; ++i) {
    const Real gap = zs.zeros[static_cast<std::size_t>(i)] - zs.zeros[static_cast<std::size_t>(i - 1)];
    if (min_gap < 0 || gap < min_gap) min_gap = gap;
  }
  const bool simple = n == 1 || min_gap > 0;
  report.add(tag + "simple", simple ? Real(0) : Real(1), {{"min_gap", n == 1 ? Real(0) : min_gap}});

  const bool has_origin = std::any_of(zs.zeros.begin(), zs.zeros.end(), [](const Real& x) { return x == 0; });
  report.add(tag + "origin iff odd", has_origin == (n % 2 == 1) ? Real(0) : Real(1));
  report.add(tag + "eigenvalue pairing", zs.pairing_defect);
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_interlacing(const RecurrenceTable& table, int n) {
  if (n < 2) throw RangeError("check_interlacing: n must be at least 2");
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  VerificationReport report("interlacing", p, Real(0));
  const ZeroSet outer = compute_zeros(table, n);
  const ZeroSet inner = compute_zeros(table, n - 1);
  Real min_sep = -1;
  for (int i = 0; i < n - 1; ++i) {
    const Real a = inner.zeros[static_cast<std::size_t>(i)] - outer.zeros[static_cast<std::size_t>(i)];
    const Real b = outer.zeros[static_cast<std::size_t>(i + 1)] - inner.zeros[static_cast<std::size_t>(i)];
    const Real sep = std::min(a, b);
    if (min_sep < 0 || sep < min_sep) min_sep = sep;
  }
  report.add("n=" + std::to_string(n), min_sep > 0 ? Real(0) : Real(1), {{"min_separation", min_sep}});
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

namespace {

struct ElectroPoint {
  std::optional<Real> residual;
  bool skipped_a_root = false;
};

ElectroPoint electro_at(const RecurrenceTable& table, int n, const std::vector<Real>& zeros, std::size_t j) {
  const Real& x = zeros[j];
  if (x == 0) return {};
  Real pair_sum = 0;
  for (std::size_t k = 0; k < zeros.size(); ++k)
    if (k != j) pair_sum += 1 / (x - zeros[k]);
  pair_sum *= 2;
  OdeCoeffsAt oc;
  try {
    oc = ode_coeffs(table, n, x);
  } catch (const SingularityError&) {
    return {std::nullopt, true};
  }
  return {relative_residual(pair_sum + oc.U, std::max(abs(pair_sum), abs(oc.U))), false};
}

}  // namespace

std::vector<std::optional<Real>> electrostatic_values(const RecurrenceTable& table, const ZeroSet& zs) {
  WorkingPrecision scope(table.params.ctx);
  std::vector<std::optional<Real>> out;
  for (std::size_t j = 0; j < zs.zeros.size(); ++j) out.push_back(electro_at(table, zs.n, zs.zeros, j).residual);
  return out;
}

VerificationReport electrostatic_residual(const RecurrenceTable& table, int n) {
  if (n < 2) throw RangeError("electrostatic_residual: n must be at least 2");
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  VerificationReport report("electro", p, p.ctx.tol_electro());
  const ZeroSet zs = compute_zeros(table, n);
  for (std::size_t j = 0; j < zs.zeros.size(); ++j) {
    const ElectroPoint pt = electro_at(table, n, zs.zeros, j);
    const std::string label = "n=" + std::to_string(n) + ",j=" + std::to_string(j);
    if (pt.skipped_a_root) {
      report.note(label + ": A_n vanishes at this zero; skipped");
    } else if (pt.residual) {
      report.add(label, *pt.residual, {{"zero", zs.zeros[j]}});
    }
  }
  if (n % 2 == 1) report.note("n=" + std::to_string(n) + ": zero at the origin excluded");
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

}  // namespace freud

#include "freud/report.hpp"

namespace freud {

VerificationReport::VerificationReport(std::string check_name, const WeightParams& p, const Real& tol)
    : check(std::move(check_name)),
      c(format_real(p.c, p.ctx.digits)),
      t(format_real(p.t, p.ctx.digits)),
      sigma(format_real(p.sigma, p.ctx.digits)),
      digits(p.ctx.digits),
      tolerance(tol) {}

void VerificationReport::add(std::string label, const Real& residual,
                             std::vector<std::pair<std::string, Real>> extras) {
  items.push_back(ReportItem{std::move(label), abs(residual), std::move(extras)});
}

void VerificationReport::finalize() {
  max_residual = 0;
  for (const auto& item : items) {
    if (item.residual > max_residual) max_residual = item.residual;
  }
  pass = !items.empty() && max_residual <= tolerance;
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& item : other.items) {
    items.push_back(ReportItem{prefix + item.label, item.residual, item.extras});
  }
  for (const auto& n : other.notes) notes.push_back(prefix + n);
  if (other.tolerance > tolerance) tolerance = other.tolerance;
  runtime_ms += other.runtime_ms;
  gating = gating && other.gating;
  finalize();
}

Real relative_residual(const Real& residual, const Real& scale) {
  const Real tiny = boost::multiprecision::pow(Real(10), -static_cast<long>(Real::default_precision()));
  return abs(residual) / std::max(Real(abs(scale)), tiny);
}

}  // namespace freud

#pragma once

#include "freud/precision.hpp"
#include "freud/weight.hpp"

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace freud {

struct ReportItem {
  std::string label;
  /// Scale-normalized residual; this is what the tolerance is compared to.
  Real residual;
  /// Named auxiliary values (raw residuals, scales, alternative readings).
  std::vector<std::pair<std::string, Real>> extras;
};

/// Outcome of one named identity check. `pass` holds iff
/// `max_residual <= tolerance`; non-gating reports are informational.
struct VerificationReport {
  std::string check;
  std::string c, t, sigma;  // parameter echo, decimal
  int digits = 0;
  std::vector<ReportItem> items;
  Real max_residual = 0;
  Real tolerance = 0;
  bool pass = false;
  bool gating = true;
  double runtime_ms = 0.0;
  std::vector<std::string> notes;

  VerificationReport() = default;
  VerificationReport(std::string check_name, const WeightParams& p, const Real& tol);

  void add(std::string label, const Real& residual,
           std::vector<std::pair<std::string, Real>> extras = {});
  void note(std::string text) { notes.push_back(std::move(text)); }
  /// Recomputes max_residual and pass from the items.
  void finalize();
  /// Appends the items of `other` (labels prefixed) and keeps the looser tolerance.
  void merge(const VerificationReport& other, const std::string& prefix = "");
};

/// |residual| / max(scale, tiny), with tiny a few ulps above zero so an
/// all-zero comparison reads as zero rather than NaN.
Real relative_residual(const Real& residual, const Real& scale);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace freud

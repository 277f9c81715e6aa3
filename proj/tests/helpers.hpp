#pragma once

#include "freud/precision.hpp"
#include "freud/weight.hpp"

#include <string>

namespace test {

using freud::Real;

inline freud::WeightParams params(const std::string& c, const std::string& t, const std::string& sigma,
                                  int digits = 120) {
  return freud::WeightParams::make(c, t, sigma, freud::PrecisionContext(digits));
}

inline Real real(const std::string& s) { return freud::parse_real(s); }

/// |a - b| <= tol * max(1, |b|)
inline bool close(const Real& a, const Real& b, const Real& tol) {
  using std::max;
  return abs(a - b) <= tol * max(Real(1), Real(abs(b)));
}

}  // namespace test

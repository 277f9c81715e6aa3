#pragma once

// Tanh-sinh (double exponential) quadrature over a list of finite panels,
// for vector-valued integrands sharing one set of nodes.

#include "freud/errors.hpp"
#include "freud/precision.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace freud::detail {

class TanhSinh {
 public:
  struct Node {
    Real delta;   // distance of the node from its panel end, as a fraction of the width
    Real weight;  // (pi/2) cosh(tau) / cosh^2((pi/2) sinh(tau))
  };

  explicit TanhSinh(int working_digits) : cutoff_(pow10(-(working_digits + 5))) {}

  /// Integrates `f` over the union of `panels`. `f(x, out)` adds nothing; it
  /// must overwrite out[0..m). Converged when every component's change
  /// between consecutive levels is at most rel_tol times its magnitude.
  template <class F>
  std::vector<Real> integrate(const std::vector<std::pair<Real, Real>>& panels, std::size_t m, F&& f,
                              const Real& rel_tol, double* achieved_log10 = nullptr,
                              int max_level = 12) {
    std::vector<Real> sums(m, Real(0));
    std::vector<Real> prev, current(m);
    std::vector<Real> values(m);
    Real h = 1;
    for (int level = 0; level <= max_level; ++level) {
      if (level > 0) h /= 2;
      const std::vector<Node>& nodes = level_nodes(level);
      for (const auto& [a, b] : panels) {
        const Real width = b - a;
        const Real half = width / 2;
        for (const Node& node : nodes) {
          if (node.delta == Real(1) / 2) {
            f(a + half, values);
            for (std::size_t i = 0; i < m; ++i) sums[i] += half * node.weight * values[i];
            continue;
          }
          const Real offset = width * node.delta;
          f(a + offset, values);
          for (std::size_t i = 0; i < m; ++i) sums[i] += half * node.weight * values[i];
          f(b - offset, values);
          for (std::size_t i = 0; i < m; ++i) sums[i] += half * node.weight * values[i];
        }
      }
      for (std::size_t i = 0; i < m; ++i) current[i] = h * sums[i];
      if (level >= 3) {
        Real worst = 0;
        for (std::size_t i = 0; i < m; ++i) {
          Real scale = abs(current[i]);
          Real diff = abs(current[i] - prev[i]);
          Real rel = scale > 0 ? Real(diff / scale) : diff;
          if (rel > worst) worst = rel;
        }
        if (worst <= rel_tol) {
          if (achieved_log10) *achieved_log10 = worst > 0 ? static_cast<double>(log10(worst)) : -1e9;
          return current;
        }
        if (level == max_level) {
          throw AccuracyError("tanh-sinh: tolerance not reached within the level budget",
                              static_cast<double>(log10(worst)));
        }
      }
      prev = current;
    }
    return current;
  }

 private:
  const std::vector<Node>& level_nodes(int level) {
    while (static_cast<int>(levels_.size()) <= level) build_level(static_cast<int>(levels_.size()));
    return levels_[static_cast<std::size_t>(level)];
  }

  void build_level(int level) {
    const Real pi = boost::math::constants::pi<Real>();
    const Real half_pi = pi / 2;
    const Real h = pow(Real(2), -level);
    std::vector<Node> nodes;
    // Level 0 takes every integer multiple of h; later levels only the odd ones.
    const int step = level == 0 ? 1 : 2;
    for (long j = level == 0 ? 0 : 1;; j += step) {
      const Real tau = h * j;
      const Real u = half_pi * sinh(tau);
      const Real e = exp(2 * u);
      const Real delta = 1 / (1 + e);
      const Real w = half_pi * cosh(tau) * 4 * delta * (1 - delta);
      if (w < cutoff_) break;
      nodes.push_back(Node{delta, w});
    }
    levels_.push_back(std::move(nodes));
  }

  Real cutoff_;
  std::vector<std::vector<Node>> levels_;
};

}  // namespace freud::detail

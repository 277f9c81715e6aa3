#include "freud/moments.hpp"

#include "freud/errors.hpp"
#include "freud/numerics.hpp"
#include "tanh_sinh.hpp"

#include <algorithm>
#include <cmath>

namespace freud {

std::string to_string(MomentMethod m) { return m == MomentMethod::series ? "series" : "quadrature"; }

Real MomentTable::eta(int order) const {
  if (order < 0) throw RangeError("eta: negative order");
  if (order % 2 != 0) return Real(0);
  const int k = order / 2;
  if (k > max_k()) throw RangeError("eta: order " + std::to_string(order) + " beyond table");
  return values[static_cast<std::size_t>(k)];
}

namespace {

// Half-line integrals I(m) = int_0^inf xi^{sigma+m} exp(-c xi^3 - t (xi^2 - xi)) d xi.
//
// With xi = x^2, I(m) = eta_{2m}. Expanding exp(t xi - t xi^2) = sum_l a_l xi^l
// and integrating term by term against exp(-c xi^3) gives
//   I(m) = sum_l a_l G(m + l),  G(j) = (1/3) c^{-(sigma+j+1)/3} Gamma((sigma+j+1)/3).
// This is the double sum over powers of (x^4 - x^2) regrouped by the power of x^2.
// The coefficients of exp(|t| xi + |t| xi^2) bound |a_l| and give the tail bound.
class GammaSeries {
 public:
  explicit GammaSeries(const WeightParams& p) : p_(p) {
    for (int j = 0; j < 3; ++j) {
      const Real z = (p_.sigma + j + 1) / 3;
      g_.push_back(pow(p_.c, -z) * gamma_fn(z) / 3);
    }
    a_ = {Real(1)};
    b_ = {Real(1)};
  }

  struct Result {
    Real value;
    Real est_error;      // absolute
    double loss_digits;  // log10(max |term| / |value|)
    int terms;
  };

  Result value(int m, int min_terms = 0) {
    const int wd = static_cast<int>(Real::default_precision());
    const Real eps = pow10(-wd);
    Real sum = 0;
    Real max_term = 0;
    Real prev_major = 0;
    constexpr int kMaxTerms = 200000;
    for (int l = 0; l < kMaxTerms; ++l) {
      const Real g = G(m + l);
      const Real term = a(l) * g;
      const Real major = b(l) * g;
      sum += term;
      if (abs(term) > max_term) max_term = abs(term);
      if (l >= min_terms && l > 2) {
        const bool small = major <= eps * abs(sum) * Real("1e-5");
        const bool shrinking = major <= prev_major / 2;
        if ((small && shrinking) || (major == 0 && prev_major == 0)) {
          Result r;
          r.value = sum;
          r.est_error = max_term * eps * (l + 1) + 2 * major;
          r.loss_digits = sum == 0 ? double(wd) : static_cast<double>(log10(max_term / abs(sum)));
          r.terms = l + 1;
          return r;
        }
      }
      prev_major = major;
    }
    throw AccuracyError("moment_series: tail bound not reached", 0.0);
  }

 private:
  Real G(int j) {
    while (static_cast<int>(g_.size()) <= j) {
      const int i = static_cast<int>(g_.size()) - 3;
      g_.push_back(g_[static_cast<std::size_t>(i)] * ((p_.sigma + i + 1) / 3) / p_.c);
    }
    return g_[static_cast<std::size_t>(j)];
  }

  // (l+1) a_{l+1} = t a_l - 2 t a_{l-1}; the majorant uses |t| and a plus sign.
  Real a(int l) {
    while (static_cast<int>(a_.size()) <= l) {
      const int n = static_cast<int>(a_.size()) - 1;
      Real next = p_.t * a_[static_cast<std::size_t>(n)];
      if (n >= 1) next -= 2 * p_.t * a_[static_cast<std::size_t>(n - 1)];
      a_.push_back(next / (n + 1));
    }
    return a_[static_cast<std::size_t>(l)];
  }

  Real b(int l) {
    const Real at = abs(p_.t);
    while (static_cast<int>(b_.size()) <= l) {
      const int n = static_cast<int>(b_.size()) - 1;
      Real next = at * b_[static_cast<std::size_t>(n)];
      if (n >= 1) next += 2 * at * b_[static_cast<std::size_t>(n - 1)];
      b_.push_back(next / (n + 1));
    }
    return b_[static_cast<std::size_t>(l)];
  }

  const WeightParams& p_;
  std::vector<Real> g_, a_, b_;
};

// Evaluates I(offset + k) for k = 0..count-1. Re-runs at raised precision when
// cancellation would eat into the target digits.
std::vector<Real> half_line_series(const WeightParams& p, int offset, int count, int min_terms,
                                   Real* est_rel_error) {
  int extra = 0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const PrecisionContext ctx = p.ctx.raised(extra);
    std::vector<Real> out;
    Real worst_rel = 0;
    double worst_loss = 0;
    {
      WorkingPrecision scope(ctx);
      const WeightParams q = p.with_ctx(ctx);
      GammaSeries series(q);
      for (int k = 0; k < count; ++k) {
        auto r = series.value(offset + k, min_terms);
        if (!(r.value > 0)) throw PrecisionError("moment_series: non-positive moment", offset + k, ctx.working_digits() * 2);
        worst_loss = std::max(worst_loss, r.loss_digits);
        Real rel = r.est_error / r.value;
        if (rel > worst_rel) worst_rel = rel;
        out.push_back(r.value);
      }
    }
    // Keep at least `digits + 5` correct digits after cancellation.
    const int needed = p.ctx.digits + 5 + static_cast<int>(std::ceil(worst_loss)) - p.ctx.working_digits();
    if (needed <= extra) {
      WorkingPrecision scope(p.ctx);
      for (auto& v : out) v = at_working_precision(v);
      if (est_rel_error) *est_rel_error = at_working_precision(worst_rel);
      return out;
    }
    extra = needed + 5;
  }
  throw PrecisionError("moment_series: cancellation exceeds precision budget", offset, p.ctx.digits * 4);
}

double max_power_for(const WeightParams& p, int k) {
  return 2.0 * k + std::max(0.0, static_cast<double>(p.alpha()));
}

std::vector<std::pair<Real, Real>> make_panels(const Real& upper, const Real& width) {
  std::vector<std::pair<Real, Real>> panels;
  const int count = std::max(1, static_cast<int>(std::ceil(static_cast<double>(upper / width))));
  const Real w = upper / count;
  for (int i = 0; i < count; ++i) panels.emplace_back(w * i, w * (i + 1));
  return panels;
}

std::vector<Real> quadrature_moments(const WeightParams& p, int max_k, Real* est_rel_error) {
  WorkingPrecision scope(p.ctx);
  const double cutoff = quadrature_cutoff(p, max_power_for(p, max_k));
  const auto panels = make_panels(Real(cutoff), Real(1) / 4);
  detail::TanhSinh quad(p.ctx.working_digits());
  const Real alpha = p.alpha();
  auto f = [&](const Real& x, std::vector<Real>& out) {
    const Real x2 = x * x;
    const Real x4 = x2 * x2;
    Real v = 2 * pow(x, alpha) * exp(-(p.c * x4 * x2 + p.t * (x4 - x2)));
    for (auto& o : out) {
      o = v;
      v *= x2;
    }
  };
  double achieved = 0;
  auto out = quad.integrate(panels, static_cast<std::size_t>(max_k) + 1, f, p.ctx.tol_quadrature(), &achieved);
  if (est_rel_error) *est_rel_error = pow10(achieved);
  return out;
}

}  // namespace

double quadrature_cutoff(const WeightParams& p, double max_power) {
  const double c = static_cast<double>(p.c);
  const double at = std::abs(static_cast<double>(p.t));
  const double target = (p.ctx.digits + 20) * std::log(10.0);
  auto excess = [&](double x) {
    return c * std::pow(x, 6) - at * std::pow(x, 4) - max_power * std::log(x) - target;
  };
  double lo = 1.0, hi = 2.0;
  while (excess(hi) < 0) hi *= 2;
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = (lo + hi) / 2;
    (excess(mid) < 0 ? lo : hi) = mid;
  }
  return hi;
}

MomentTable moment_table(const WeightParams& p, int max_k, MomentMethod method) {
  if (max_k < 0) throw RangeError("moment_table: negative max_k");
  MomentTable table{p, {}, method, Real(0)};
  WorkingPrecision scope(p.ctx);
  if (method == MomentMethod::series) {
    table.values = half_line_series(p, 0, max_k + 1, 0, &table.est_error);
  } else {
    table.values = quadrature_moments(p, max_k, &table.est_error);
  }
  return table;
}

Real moment_series(const WeightParams& p, int k, int min_terms) {
  if (k < 0) throw RangeError("moment_series: negative k");
  WorkingPrecision scope(p.ctx);
  return half_line_series(p, k, 1, min_terms, nullptr).front();
}

Real moment_quadrature(const WeightParams& p, int k) {
  if (k < 0) throw RangeError("moment_quadrature: negative k");
  WorkingPrecision scope(p.ctx);
  return quadrature_moments(p, k, nullptr).back();
}

std::vector<Real> airy_moment_table(const WeightParams& p, int max_order, AiryWeight which,
                                    MomentMethod method) {
  if (max_order < 0) throw RangeError("airy_moment_table: negative order");
  WorkingPrecision scope(p.ctx);
  const int shift = which == AiryWeight::w1 ? 0 : 1;
  if (method == MomentMethod::series) {
    return half_line_series(p, shift, max_order + 1, 0, nullptr);
  }
  // Quadrature directly in xi on [0, X^2].
  const double x_cut = quadrature_cutoff(p, max_power_for(p, max_order + shift));
  const auto panels = make_panels(Real(x_cut * x_cut), Real(1) / 2);
  detail::TanhSinh quad(p.ctx.working_digits());
  const Real power = p.sigma + shift;
  auto f = [&](const Real& xi, std::vector<Real>& out) {
    const Real xi2 = xi * xi;
    Real v = pow(xi, power) * exp(-(p.c * xi2 * xi + p.t * (xi2 - xi)));
    for (auto& o : out) {
      o = v;
      v *= xi;
    }
  };
  return quad.integrate(panels, static_cast<std::size_t>(max_order) + 1, f, p.ctx.tol_quadrature());
}

Real airy_moment(const WeightParams& p, int i, int j, AiryWeight which, MomentMethod method) {
  if (i < 0 || j < 0) throw RangeError("airy_moment: negative index");
  WorkingPrecision scope(p.ctx);
  return airy_moment_table(p, i + j, which, method).back();
}

VerificationReport check_moment_agreement(const WeightParams& p, int max_k) {
  Stopwatch clock;
  WorkingPrecision scope(p.ctx);
  VerificationReport report("moment_agreement", p, p.ctx.tol_identity());
  const auto series = moment_table(p, max_k, MomentMethod::series);
  const auto quad = moment_table(p, max_k, MomentMethod::quadrature);
  for (int k = 0; k <= max_k; ++k) {
    const Real& s = series.values[static_cast<std::size_t>(k)];
    const Real& q = quad.values[static_cast<std::size_t>(k)];
    report.add("k=" + std::to_string(k), relative_residual(s - q, s), {{"series", s}, {"quadrature", q}});
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_shift_identity(const WeightParams& p, int k, MomentMethod method) {
  Stopwatch clock;
  WorkingPrecision scope(p.ctx);
  VerificationReport report("shift_identity", p, p.ctx.tol_identity());
  const Real lhs = method == MomentMethod::series ? moment_series(p, k) : moment_quadrature(p, k);
  const WeightParams shifted = p.with_sigma(p.sigma + k);
  const Real rhs = method == MomentMethod::series ? moment_series(shifted, 0) : moment_quadrature(shifted, 0);
  report.add("k=" + std::to_string(k), relative_residual(lhs - rhs, lhs), {{"eta_2k", lhs}, {"eta_0_shifted", rhs}});
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_derivative_identity(const WeightParams& p, int n, MomentMethod method,
                                             std::optional<Real> h_opt) {
  if (n < 1 || n > 3) throw RangeError("check_derivative_identity: n must be 1, 2 or 3");
  Stopwatch clock;
  WorkingPrecision scope(p.ctx);
  const Real h = h_opt ? at_working_precision(*h_opt) : p.ctx.fd_step();
  const Real tol = std::max(Real(h * h), p.ctx.tol_identity());
  VerificationReport report("derivative_identity", p, tol);

  auto eta0_at = [&](const Real& dt) {
    const WeightParams q = p.with_t(p.t + dt);
    return method == MomentMethod::series ? moment_series(q, 0) : moment_quadrature(q, 0);
  };

  Real fd;
  if (n == 1) {
    fd = (eta0_at(h) - eta0_at(-h)) / (2 * h);
  } else if (n == 2) {
    fd = (eta0_at(h) - 2 * eta0_at(Real(0)) + eta0_at(-h)) / (h * h);
  } else {
    fd = (eta0_at(2 * h) - 2 * eta0_at(h) + 2 * eta0_at(-h) - eta0_at(-2 * h)) / (2 * h * h * h);
  }

  const MomentTable table = moment_table(p, 2 * n, method);
  Real rhs = 0;
  Real scale = 0;
  long binom = 1;
  for (int k = 0; k <= n; ++k) {
    const Real term = Real(binom) * table.eta(4 * n - 2 * k);
    rhs += ((n + k) % 2 == 0) ? term : Real(-term);
    scale = std::max(scale, term);
    binom = binom * (n - k) / (k + 1);
  }
  report.add("n=" + std::to_string(n), relative_residual(fd - rhs, scale),
             {{"finite_difference", fd}, {"moment_sum", rhs}, {"h", h}});
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

}  // namespace freud

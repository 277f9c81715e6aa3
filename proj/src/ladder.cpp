#include "freud/ladder.hpp"

#include "freud/errors.hpp"
#include "freud/moments.hpp"
#include "freud/polynomials.hpp"
#include "freud/weight.hpp"

#include <algorithm>

namespace freud {

Real LadderCoeffs::B(const Real& x) const {
  if (B_singular != 0 && x == 0) throw SingularityError("B_n: pole at x = 0");
  return B_singular == 0 ? B_poly(x) : Real(B_poly(x) + B_singular / x);
}

Real LadderCoeffs::B_prime(const Real& x) const {
  if (B_singular != 0 && x == 0) throw SingularityError("B_n': pole at x = 0");
  const Real d = B_poly.derivative()(x);
  return B_singular == 0 ? d : Real(d - B_singular / x / x);
}

LadderCoeffs ladder_coeffs(const RecurrenceTable& table, int n) {
  if (n < 0 || n + 2 > table.max_n()) {
    throw RangeError("ladder_coeffs: n=" + std::to_string(n) + " needs 0 <= n <= N-2");
  }
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  const Real six_c = 6 * p.c;
  const Real g0 = table.gamma(n), g1 = table.gamma(n + 1);
  const Real x0 = table.xi(n), x1 = table.xi(n + 1);
  LadderCoeffs lc;
  lc.n = n;
  lc.A_poly = Poly{six_c * (x0 + x1) + 4 * p.t * (g0 + g1) - 2 * p.t, Real(0), six_c * (g0 + g1) + 4 * p.t, Real(0), six_c};
  lc.B_poly = Poly{Real(0), six_c * x0 + 4 * p.t * g0, Real(0), six_c * g0};
  lc.B_singular = p.alpha() * RecurrenceTable::omega(n);
  return lc;
}

std::vector<Real> ladder_grid() {
  return {Real("-1.7"), Real("-0.9"), Real("-0.3"), Real("0.3"), Real("0.9"), Real("1.7")};
}

std::vector<Real> ode_grid() {
  return {Real("-2.0"), Real("-1.1"), Real("-0.4"), Real("0.4"), Real("1.1"), Real("2.0")};
}

namespace {

std::string at_label(const std::string& prefix, const Real& x) { return prefix + "x=" + format_real(x, 6); }

Real max_abs(std::initializer_list<Real> values) {
  Real m = 0;
  for (const auto& v : values) m = std::max(m, Real(abs(v)));
  return m;
}

// Grid points may come from outside any precision scope; re-read them at the active one.
std::vector<Real> working_grid(const std::vector<Real>& xgrid) {
  std::vector<Real> out;
  for (const auto& x : xgrid) {
    if (x == 0) throw PreconditionError("grid must avoid x = 0");
    out.push_back(at_working_precision(x));
  }
  return out;
}

Poly v0_prime_poly(const WeightParams& p) {
  return Poly{Real(0), -2 * p.t, Real(0), 4 * p.t, Real(0), 6 * p.c};
}

}  // namespace

VerificationReport check_lowering(const RecurrenceTable& table, int n, const std::vector<Real>& xgrid) {
  if (n < 1) throw RangeError("check_lowering: n must be at least 1");
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  const std::vector<Real> grid = working_grid(xgrid);
  VerificationReport report("lowering", p, p.ctx.tol_identity());
  const LadderCoeffs lc = ladder_coeffs(table, n);
  const auto family = build_S_family(table, n);
  const Poly& s = family[static_cast<std::size_t>(n)];
  const Poly& s_prev = family[static_cast<std::size_t>(n - 1)];
  const Poly ds = s.derivative();
  for (const auto& x : grid) {
    const Real lhs = ds(x);
    const Real raise = table.gamma(n) * lc.A(x) * s_prev(x);
    const Real diag = lc.B(x) * s(x);
    report.add(at_label("n=" + std::to_string(n) + ",", x), relative_residual(lhs - (raise - diag), max_abs({lhs, raise, diag})));
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_M1(const RecurrenceTable& table, int n) {
  if (n < 0) throw RangeError("check_M1: negative n");
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  VerificationReport report("m1", p, p.ctx.tol_quadrature());
  const LadderCoeffs a = ladder_coeffs(table, n);
  const LadderCoeffs b = ladder_coeffs(table, n + 1);
  const Poly lhs = a.B_poly + b.B_poly;
  const Poly xa = a.A_poly.shifted(1);
  const Poly v0 = v0_prime_poly(p);
  for (int i = 0; i <= 5; ++i) {
    const Real l = lhs.coeff(i);
    const Real r = xa.coeff(i) - v0.coeff(i);
    const Real scale = max_abs({l, xa.coeff(i), v0.coeff(i)});
    report.add("n=" + std::to_string(n) + ",x^" + std::to_string(i), relative_residual(l - r, scale), {{"lhs", l}, {"rhs", r}});
  }
  // 1/x part: -v' contributes +(2 sigma + 1)/x.
  const Real sl = a.B_singular + b.B_singular;
  report.add("n=" + std::to_string(n) + ",x^-1", relative_residual(sl - p.alpha(), p.alpha()), {{"lhs", sl}, {"rhs", p.alpha()}});
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_AnBn_lemma(const RecurrenceTable& table, int n, const std::vector<Real>& xgrid) {
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  const std::vector<Real> grid = working_grid(xgrid);
  VerificationReport report("anbn_lemma", p, p.ctx.tol_identity());
  const LadderCoeffs a = ladder_coeffs(table, n);
  const LadderCoeffs b = ladder_coeffs(table, n + 1);
  for (const auto& x : grid) {
    const Real lhs = a.A(x);
    const Real t1 = potential_v0_prime(p, x) / x;
    const Real t2 = (a.B(x) + b.B(x)) / x;
    const Real t3 = p.alpha() / (x * x);
    report.add(at_label("n=" + std::to_string(n) + ",", x), relative_residual(lhs - (t1 + t2 - t3), max_abs({lhs, t1, t2, t3})));
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_M2prime(const RecurrenceTable& table, int n, const std::vector<Real>& xgrid) {
  if (n < 1) throw RangeError("check_M2prime: n must be at least 1");
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  const std::vector<Real> grid = working_grid(xgrid);
  VerificationReport report("m2prime", p, p.ctx.tol_identity());
  std::vector<LadderCoeffs> lc;
  for (int j = 0; j <= n; ++j) lc.push_back(ladder_coeffs(table, j));
  for (const auto& x : grid) {
    Real sum_a = 0;
    for (int j = 0; j < n; ++j) sum_a += lc[static_cast<std::size_t>(j)].A(x);
    const Real b = lc.back().B(x);
    const Real vb = potential_v_prime(p, x) * b;
    const Real bb = b * b;
    const Real aa = table.gamma(n) * lc.back().A(x) * lc[static_cast<std::size_t>(n - 1)].A(x);
    report.add(at_label("n=" + std::to_string(n) + ",", x), relative_residual(vb + sum_a + bb - aa, max_abs({vb, sum_a, bb, aa})),
               {{"sum_A", sum_a}, {"gamma_A_A", aa}});
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

OdeCoeffsAt ode_coeffs(const RecurrenceTable& table, int n, const Real& x_in) {
  if (n < 1) throw RangeError("ode_coeffs: n must be at least 1");
  if (x_in == 0) throw SingularityError("ode_coeffs: x = 0");
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  const Real x = at_working_precision(x_in);
  const LadderCoeffs a = ladder_coeffs(table, n);
  const LadderCoeffs am = ladder_coeffs(table, n - 1);
  const Real an = a.A(x);
  if (an == 0) throw SingularityError("ode_coeffs: A_n vanishes at x");
  const Real log_deriv = a.A_prime(x) / an;
  const Real vp = potential_v_prime(p, x);
  const Real b = a.B(x);
  OdeCoeffsAt out;
  out.x = x;
  out.U = -vp - log_deriv;
  out.W = -b * (vp + b + log_deriv) + table.gamma(n) * an * am.A(x) + a.B_prime(x);
  return out;
}

Real ode_U_expanded(const RecurrenceTable& table, int n, const Real& x_in) {
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  const Real x = at_working_precision(x_in);
  const Real c = p.c, t = p.t, al = p.alpha();
  const Real g = table.gamma(n), gp = table.gamma(n + 1);
  const Real x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x;
  const Real a_plus = 6 * c * x4 + 6 * c * (g + gp) * x2 + 6 * c * (table.xi(n + 1) + table.xi(n)) - 2 * t + 4 * t * (x2 + g + gp);
  const Real a_plus_prime = 24 * c * x3 + 2 * (6 * c * (g + gp) + 4 * t) * x;
  return -6 * c * x5 - t * (4 * x3 - 2 * x) + al / x - a_plus_prime / a_plus;
}

Real ode_W_expanded(const RecurrenceTable& table, int n, const Real& x_in) {
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  const Real x = at_working_precision(x_in);
  const Real c = p.c, t = p.t, al = p.alpha();
  const int om = RecurrenceTable::omega(n);
  const Real g = table.gamma(n), gp = table.gamma(n + 1), gm = table.gamma(n - 1);
  const Real xi = table.xi(n), xip = table.xi(n + 1), xim = table.xi(n - 1);
  const Real x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x;
  const Real a_plus = 6 * c * x4 + 6 * c * (g + gp) * x2 + 6 * c * (xip + xi) - 2 * t + 4 * t * (x2 + g + gp);
  const Real a_minus = 6 * c * x4 + 6 * c * (g + gm) * x2 + 6 * c * (xim + xi) - 2 * t + 4 * t * (x2 + g + gm);
  const Real a_plus_prime = 24 * c * x3 + 2 * (6 * c * (g + gp) + 4 * t) * x;
  const Real first = 18 * c * g * x2 + 6 * c * xi - al * om / x2 + 4 * t * g;
  const Real product = g * a_plus * a_minus;
  const Real bracket = 6 * c * x5 + (6 * c * g + 4 * t) * x3 - al / x + (6 * c * xi + 4 * t * g - 2 * t) * x + al * om / x +
                       a_plus_prime / a_plus;
  const Real b = 6 * c * g * x3 + (6 * c * xi + 4 * t * g) * x + al * om / x;
  return first + product - bracket * b;
}

namespace {

void add_ode_point(VerificationReport& report, const RecurrenceTable& table, int n, const Poly& s, const Real& x,
                   const std::string& prefix) {
  const OdeCoeffsAt oc = ode_coeffs(table, n, x);
  const Real d2 = s.derivative().derivative()(x);
  const Real d1 = oc.U * s.derivative()(x);
  const Real d0 = oc.W * s(x);
  report.add(at_label(prefix, x), relative_residual(d2 + d1 + d0, max_abs({d2, d1, d0})), {{"U", oc.U}, {"W", oc.W}});
}

// Zeroth-order coefficient assembled as B' - B A'/A + sum_{j<n} A_j.
void add_generic_point(VerificationReport& report, const RecurrenceTable& table, int n, const Poly& s, const Real& x,
                       const std::vector<LadderCoeffs>& lc) {
  const WeightParams& p = table.params;
  const LadderCoeffs& a = lc[static_cast<std::size_t>(n)];
  const Real log_deriv = a.A_prime(x) / a.A(x);
  Real sum_a = 0;
  for (int j = 0; j < n; ++j) sum_a += lc[static_cast<std::size_t>(j)].A(x);
  const Real w = a.B_prime(x) - a.B(x) * log_deriv + sum_a;
  const Real d2 = s.derivative().derivative()(x);
  const Real d1 = -(potential_v_prime(p, x) + log_deriv) * s.derivative()(x);
  const Real d0 = w * s(x);
  report.add(at_label("generic n=" + std::to_string(n) + ",", x), relative_residual(d2 + d1 + d0, max_abs({d2, d1, d0})));
}

}  // namespace

VerificationReport check_ode(const RecurrenceTable& table, int n, const std::vector<Real>& xgrid) {
  if (n < 1) throw RangeError("check_ode: n must be at least 1");
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  const std::vector<Real> grid = working_grid(xgrid);
  VerificationReport report("ode", p, p.ctx.tol_identity());
  const auto family = build_S_family(table, n);
  const Poly& s = family[static_cast<std::size_t>(n)];
  std::vector<LadderCoeffs> lc;
  for (int j = 0; j <= n; ++j) lc.push_back(ladder_coeffs(table, j));
  const std::string prefix = "n=" + std::to_string(n) + ",";
  for (const auto& x : grid) {
    add_ode_point(report, table, n, s, x, prefix);
    add_generic_point(report, table, n, s, x, lc);
  }
  if (n % 2 == 1) {
    const Real h = Real("1e-3");
    add_ode_point(report, table, n, s, h, "near-origin " + prefix);
    add_ode_point(report, table, n, s, -h, "near-origin " + prefix);
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_ode_expanded(const RecurrenceTable& table, int n, const std::vector<Real>& xgrid) {
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  const std::vector<Real> grid = working_grid(xgrid);
  VerificationReport report("ode_expanded", p, p.ctx.tol_identity());
  report.gating = false;
  for (const auto& x : grid) {
    const OdeCoeffsAt oc = ode_coeffs(table, n, x);
    const Real u = ode_U_expanded(table, n, x);
    const Real w = ode_W_expanded(table, n, x);
    report.add(at_label("U n=" + std::to_string(n) + ",", x), relative_residual(u - oc.U, abs(oc.U)), {{"expanded", u}, {"compact", oc.U}});
    report.add(at_label("W n=" + std::to_string(n) + ",", x), relative_residual(w - oc.W, abs(oc.W)), {{"expanded", w}, {"compact", oc.W}});
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

Real QuasiCoeffs::at(int k) const {
  auto it = u.find(k);
  if (it == u.end()) throw RangeError("quasi coefficient u[" + std::to_string(k) + "] not stored");
  return it->second;
}

namespace {

void require_quasi(const RecurrenceTable& table, int n) {
  if (n < 6 || n > table.max_n() - 4) {
    throw RangeError("quasi_coeffs: n=" + std::to_string(n) + " needs 6 <= n <= N-4");
  }
}

QuasiCoeffs quasi_common(const RecurrenceTable& table, int n) {
  const Real c6 = 6 * table.params.c;
  auto g = [&](int k) { return table.gamma(k); };
  QuasiCoeffs q;
  q.n = n;
  q.u[n - 6] = c6 * g(n) * g(n - 1) * g(n - 2) * g(n - 3) * g(n - 4) * g(n - 5);
  q.u[n - 5] = 0;
  q.u[n - 3] = 0;
  q.u[n - 1] = 0;
  q.u[n] = n;
  return q;
}

}  // namespace

QuasiCoeffs quasi_coeffs(const RecurrenceTable& table, int n) {
  require_quasi(table, n);
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  auto g = [&](int k) { return table.gamma(k); };
  const Real c6 = 6 * p.c;
  QuasiCoeffs q = quasi_common(table, n);
  const Real head4 = g(n) * g(n - 1) * g(n - 2) * g(n - 3);
  q.u[n - 4] = c6 * head4 * (g(n - 4) + g(n - 3) + g(n - 2) + g(n - 1) + g(n) + g(n + 1)) + 4 * p.t * head4;
  const Real inner = table.xi(n - 1) + table.xi(n) + table.xi(n + 1) + g(n - 1) * g(n + 1) +
                     g(n - 2) * (g(n - 3) + g(n - 2) + g(n - 1) + g(n) + g(n + 1));
  q.u[n - 2] = g(n) * g(n - 1) * (c6 * inner + 4 * p.t * (g(n - 2) + g(n - 1) + g(n) + g(n + 1)) - 2 * p.t);
  return q;
}

QuasiCoeffs quasi_coeffs_printed(const RecurrenceTable& table, int n) {
  require_quasi(table, n);
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  auto g = [&](int k) { return table.gamma(k); };
  const Real c6 = 6 * p.c;
  QuasiCoeffs q = quasi_common(table, n);
  q.u[n - 4] = c6 * g(n) * g(n - 1) * g(n - 2) * g(n - 3) * (g(n - 4) + g(n - 3) + g(n - 2) + g(n - 1) + g(n) + g(n + 1));
  const Real inner = table.xi(n - 2) + table.xi(n - 1) + table.xi(n) + table.xi(n + 1) + g(n - 1) * g(n - 2) +
                     g(n + 1) * (g(n - 2) + g(n - 1));
  q.u[n - 2] = g(n) * g(n - 1) * (c6 * inner + 4 * p.t * (g(n - 2) + g(n - 1) + g(n) + g(n + 1)) - 2 * p.t);
  return q;
}

namespace {

struct Projection {
  Real value;      // <x S_n', S_k> / Gamma_hat_k
  Real magnitude;  // sum of |terms| / Gamma_hat_k
};

std::map<int, Projection> projections(const RecurrenceTable& table, int n, int k_first, const std::vector<Poly>& family) {
  const MomentTable m = moment_table(table.params, n, MomentMethod::series);
  const Poly xds = family[static_cast<std::size_t>(n)].derivative().shifted(1);
  std::map<int, Projection> out;
  for (int k = k_first; k <= n; ++k) {
    const Poly prod = xds * family[static_cast<std::size_t>(k)];
    Real sum = 0, mag = 0;
    for (int i = 0; i <= prod.degree(); i += 2) {
      const Real term = prod.coeff(i) * m.eta(i);
      sum += term;
      mag += abs(term);
    }
    out[k] = Projection{sum / table.norm(k), mag / table.norm(k)};
  }
  return out;
}

void add_projection_items(VerificationReport& report, const QuasiCoeffs& q, const std::map<int, Projection>& proj) {
  for (const auto& [k, pr] : proj) {
    const auto it = q.u.find(k);
    const Real formula = it == q.u.end() ? Real(0) : it->second;
    // A vanishing coefficient is judged against the size of the terms that cancel.
    const Real scale = formula != 0 ? Real(abs(formula)) : pr.magnitude;
    report.add("projection k=" + std::to_string(k), relative_residual(formula - pr.value, scale),
               {{"formula", formula}, {"projection", pr.value}});
  }
}

}  // namespace

VerificationReport check_quasi(const RecurrenceTable& table, int n, const std::vector<Real>& xgrid) {
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  const std::vector<Real> grid = working_grid(xgrid);
  VerificationReport report("quasi", p, p.ctx.tol_identity());
  const QuasiCoeffs q = quasi_coeffs(table, n);
  const auto family = build_S_family(table, n);
  const Poly xds = family[static_cast<std::size_t>(n)].derivative().shifted(1);

  // (a) coefficient identity; held to the exact-arithmetic tolerance.
  Poly expansion;
  for (const auto& [k, u] : q.u) expansion += u * family[static_cast<std::size_t>(k)];
  const Poly diff = xds - expansion;
  Real worst = 0;
  Real scale = 0;
  for (int i = 0; i <= xds.degree(); ++i) scale = std::max(scale, Real(abs(xds.coeff(i))));
  for (const auto& [k, u] : q.u) {
    const Poly& s = family[static_cast<std::size_t>(k)];
    for (int i = 0; i <= s.degree(); ++i) scale = std::max(scale, Real(abs(u * s.coeff(i))));
  }
  for (int i = 0; i <= diff.degree(); ++i) worst = std::max(worst, Real(abs(diff.coeff(i))));
  const Real coeff_res = relative_residual(worst, scale);
  report.add("coefficients n=" + std::to_string(n), coeff_res);
  if (coeff_res > p.ctx.tol_quadrature()) report.note("coefficient identity exceeds exact-arithmetic tolerance");

  for (const auto& x : grid) {
    const Real lhs = xds(x);
    Real rhs = 0;
    Real mag = abs(lhs);
    for (const auto& [k, u] : q.u) {
      const Real term = u * family[static_cast<std::size_t>(k)](x);
      rhs += term;
      mag = std::max(mag, Real(abs(term)));
    }
    report.add(at_label("pointwise n=" + std::to_string(n) + ",", x), relative_residual(lhs - rhs, mag));
  }

  // (b) projection oracle, including the orders below n-6 that must vanish.
  add_projection_items(report, q, projections(table, n, std::max(0, n - 8), family));
  report.finalize();
  if (coeff_res > p.ctx.tol_quadrature()) report.pass = false;
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_quasi_printed(const RecurrenceTable& table, int n) {
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  VerificationReport report("quasi_printed", p, p.ctx.tol_identity());
  report.gating = false;
  const QuasiCoeffs q = quasi_coeffs_printed(table, n);
  const auto family = build_S_family(table, n);
  auto proj = projections(table, n, n - 6, family);
  add_projection_items(report, q, proj);
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

}  // namespace freud

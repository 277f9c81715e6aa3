#include "freud/recurrence.hpp"

#include "freud/errors.hpp"
#include "freud/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace freud {

std::string to_string(GammaMethod m) {
  switch (m) {
    case GammaMethod::stieltjes: return "stieltjes";
    case GammaMethod::hankel: return "hankel";
    case GammaMethod::string: return "string";
  }
  return "?";
}

GammaMethod parse_gamma_method(const std::string& name) {
  if (name == "stieltjes") return GammaMethod::stieltjes;
  if (name == "hankel") return GammaMethod::hankel;
  if (name == "string") return GammaMethod::string;
  throw PreconditionError("unknown gamma method '" + name + "'");
}

Real RecurrenceTable::gamma(int n) const {
  if (n < 0) return Real(0);
  if (n > max_n()) throw RangeError("gamma index " + std::to_string(n) + " beyond table of size " + std::to_string(max_n()));
  return gammas[static_cast<std::size_t>(n)];
}

Real RecurrenceTable::norm(int n) const {
  if (n < 0 || n > max_n()) throw RangeError("norm index " + std::to_string(n) + " out of range");
  return norms[static_cast<std::size_t>(n)];
}

Real RecurrenceTable::xi(int n) const {
  if (n < 0) return Real(0);
  return gamma(n) * (gamma(n - 1) + gamma(n) + gamma(n + 1));
}

namespace {

void demote(RecurrenceTable& table, const PrecisionContext& ctx) {
  WorkingPrecision scope(ctx);
  for (auto& g : table.gammas) g = at_working_precision(g);
  for (auto& h : table.norms) h = at_working_precision(h);
}

// One Stieltjes pass at the precision of p.ctx. Returns the worst digit loss.
double stieltjes_pass(const WeightParams& p, int max_n, RecurrenceTable& table) {
  WorkingPrecision scope(p.ctx);
  const MomentTable moments = moment_table(p, max_n, MomentMethod::series);
  table.gammas.assign(1, Real(0));
  table.norms.clear();
  table.condition_digits.clear();
  Poly prev{Real(1)};
  Poly cur = Poly::monomial(0);
  double worst = 0;
  for (int n = 0; n <= max_n; ++n) {
    if (n == 1) {
      prev = cur;
      cur = Poly::monomial(1);
    } else if (n >= 2) {
      Poly next = cur.shifted(1) - table.gammas[static_cast<std::size_t>(n - 1)] * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    const Poly square = cur * cur;
    Real sum = 0;
    Real magnitude = 0;
    for (int i = 0; i <= square.degree(); i += 2) {
      const Real term = square.coeff(i) * moments.eta(i);
      sum += term;
      magnitude += abs(term);
    }
    if (!(sum > 0)) {
      throw PrecisionError("gamma_stieltjes: non-positive norm at n=" + std::to_string(n), n,
                           p.ctx.working_digits() + static_cast<int>(std::ceil(static_cast<double>(log10(magnitude)))) + 20);
    }
    const double loss = static_cast<double>(log10(magnitude / sum));
    worst = std::max(worst, loss);
    table.condition_digits.push_back(loss);
    table.norms.push_back(sum);
    if (n >= 1) table.gammas.push_back(sum / table.norms[static_cast<std::size_t>(n - 1)]);
  }
  return worst;
}

// Leading principal minors of the Hankel matrix [eta_{2(i+j)+shift}], sizes 0..size,
// via elimination without pivoting. Loss of digits per pivot goes into `loss`.
std::vector<Real> hankel_minors(const MomentTable& m, int size, int shift, std::vector<double>& loss) {
  std::vector<std::vector<Real>> a(static_cast<std::size_t>(size), std::vector<Real>(static_cast<std::size_t>(size)));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) a[i][j] = m.eta(2 * (i + j) + shift);
  std::vector<Real> minors{Real(1)};
  for (int k = 0; k < size; ++k) {
    const Real pivot = a[k][k];
    if (!(pivot > 0)) {
      throw PrecisionError("gamma_hankel: non-positive pivot at size " + std::to_string(k + 1), k + 1, 0);
    }
    loss.push_back(static_cast<double>(log10(m.eta(4 * k + shift) / pivot)));
    minors.push_back(minors.back() * pivot);
    for (int i = k + 1; i < size; ++i) {
      const Real f = a[i][k] / pivot;
      for (int j = k + 1; j < size; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return minors;
}

double hankel_pass(const WeightParams& p, int max_n, RecurrenceTable& table) {
  WorkingPrecision scope(p.ctx);
  const MomentTable moments = moment_table(p, max_n, MomentMethod::series);
  // Delta_j for j = 0..N+1 needs D~ up to ceil((N+1)/2) and D^ up to floor((N+1)/2).
  const int even_size = (max_n + 2) / 2;
  const int odd_size = (max_n + 1) / 2;
  std::vector<double> loss_even, loss_odd;
  const auto dt = hankel_minors(moments, even_size, 0, loss_even);
  const auto dh = hankel_minors(moments, odd_size, 2, loss_odd);
  auto delta = [&](int j) -> Real {
    const int k = j / 2;
    if (j % 2 == 0) return dt[static_cast<std::size_t>(k)] * dh[static_cast<std::size_t>(k)];
    return dt[static_cast<std::size_t>(k + 1)] * dh[static_cast<std::size_t>(k)];
  };
  table.gammas.assign(1, Real(0));
  table.norms.clear();
  table.condition_digits.clear();
  double worst = 0;
  for (int n = 0; n <= max_n; ++n) {
    const Real d0 = delta(n);
    const Real d1 = delta(n + 1);
    table.norms.push_back(d1 / d0);
    if (n >= 1) table.gammas.push_back(d1 * delta(n - 1) / (d0 * d0));
    // Gamma_hat_n is the n-th pivot of whichever parity block it belongs to.
    const double loss = n % 2 == 0 ? loss_even[static_cast<std::size_t>(n / 2)] : loss_odd[static_cast<std::size_t>(n / 2)];
    table.condition_digits.push_back(loss);
    worst = std::max(worst, loss);
  }
  return worst;
}

// Runs `pass` and repeats at raised precision while the measured loss eats
// into the guard digits.
template <class Pass>
RecurrenceTable with_auto_raise(const WeightParams& p, int max_n, GammaMethod method, Pass pass) {
  RecurrenceTable table;
  table.params = p;
  table.method = method;
  int extra = 0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const PrecisionContext ctx = p.ctx.raised(extra);
    double loss = 0;
    try {
      loss = pass(p.with_ctx(ctx), max_n, table);
    } catch (const PrecisionError&) {
      if (attempt == 3) throw;
      extra = extra + p.ctx.guard();
      continue;
    }
    const int needed = p.ctx.digits + 5 + static_cast<int>(std::ceil(loss)) - p.ctx.working_digits();
    if (needed <= extra) {
      demote(table, p.ctx);
      return table;
    }
    extra = needed + 5;
  }
  throw PrecisionError(to_string(method) + ": cancellation exceeds precision budget", max_n, p.ctx.digits * 4);
}

}  // namespace

RecurrenceTable gamma_stieltjes(const WeightParams& p, int max_n) {
  if (max_n < 1) throw PreconditionError("gamma_stieltjes: N must be at least 1");
  p.validate();
  WorkingPrecision scope(p.ctx);
  return with_auto_raise(p, max_n, GammaMethod::stieltjes, stieltjes_pass);
}

Real gamma_initial(const WeightParams& p) {
  p.validate();
  WorkingPrecision scope(p.ctx);
  const MomentTable m = moment_table(p, 1, MomentMethod::series);
  return m.eta(2) / m.eta(0);
}

RecurrenceTable gamma_hankel(const WeightParams& p, int max_n) {
  if (max_n < 1) throw PreconditionError("gamma_hankel: N must be at least 1");
  p.validate();
  WorkingPrecision scope(p.ctx);
  return with_auto_raise(p, max_n, GammaMethod::hankel, hankel_pass);
}

RecurrenceTable gamma_string_recursion(const WeightParams& p, int max_n, std::pair<Real, Real> seed,
                                       const RecurrenceTable* reference) {
  if (max_n < 2) throw PreconditionError("gamma_string_recursion: N must be at least 2");
  p.validate();
  WorkingPrecision scope(p.ctx);
  RecurrenceTable table;
  table.params = p;
  table.method = GammaMethod::string;
  table.gammas = {Real(0), at_working_precision(seed.first), at_working_precision(seed.second)};

  auto fail = [&](const std::string& why, int index) {
    std::vector<std::string> partial;
    for (const auto& g : table.gammas) partial.push_back(format_real(g, p.ctx.digits));
    throw InstabilityError("gamma_string_recursion: " + why + " at n=" + std::to_string(index), index, partial);
  };
  if (!(table.gammas[1] > 0) || !(table.gammas[2] > 0)) fail("non-positive seed", 1);

  const Real six_c = 6 * p.c;
  const Real alpha = p.alpha();
  const Real tiny = pow10(-p.ctx.working_digits());
  for (int n = 1; n + 2 <= max_n; ++n) {
    auto g = [&](int k) { return k < 0 ? Real(0) : table.gammas[static_cast<std::size_t>(k)]; };
    const Real gm = g(n - 1), g0 = g(n), gp = g(n + 1);
    const Real xi_m = g(n - 1) * (g(n - 2) + g(n - 1) + g0);
    const Real xi_0 = g0 * (gm + g0 + gp);
    const Real pivot = six_c * g0 * gp;
    if (abs(pivot) <= tiny) fail("vanishing pivot", n + 2);
    // Xi_{n+1} = gamma_{n+1}(gamma_n + gamma_{n+1}) + gamma_{n+1} gamma_{n+2}; the last part is the unknown.
    const Real known = six_c * (g0 * (xi_m + xi_0 + gp * (g0 + gp)) + gm * g0 * gp) + 4 * p.t * xi_0 - 2 * p.t * g0;
    const Real rhs = n + alpha * RecurrenceTable::omega(n);
    const Real next = (rhs - known) / pivot;
    if (!(next > 0)) fail("non-positive gamma", n + 2);
    table.gammas.push_back(next);
  }

  table.norms.assign(1, moment_table(p, 0, MomentMethod::series).values[0]);
  for (int n = 1; n <= max_n; ++n) table.norms.push_back(table.norms.back() * table.gammas[static_cast<std::size_t>(n)]);

  if (reference) {
    const Real tol = p.ctx.tol_identity();
    const int top = std::min(max_n, reference->max_n());
    int window = 0;
    bool intact = true;
    for (int n = 0; n <= top; ++n) {
      const Real ref = reference->gamma(n);
      const Real d = n == 0 ? abs(table.gammas[0]) : Real(abs(table.gammas[static_cast<std::size_t>(n)] - ref) / ref);
      table.divergence.push_back(d);
      if (intact && d <= tol) {
        window = n;
      } else {
        intact = false;
      }
    }
    table.agreement_window = window;
  }
  return table;
}

RecurrenceTable gamma_string_recursion(const WeightParams& p, int max_n) {
  WorkingPrecision scope(p.ctx);
  const RecurrenceTable ref = gamma_stieltjes(p, max_n);
  return gamma_string_recursion(p, max_n, {ref.gamma(1), ref.gamma(2)}, &ref);
}

RecurrenceTable compute_gammas(const WeightParams& p, int max_n, GammaMethod method) {
  switch (method) {
    case GammaMethod::stieltjes: return gamma_stieltjes(p, max_n);
    case GammaMethod::hankel: return gamma_hankel(p, max_n);
    case GammaMethod::string: return gamma_string_recursion(p, max_n);
  }
  throw PreconditionError("compute_gammas: unknown method");
}

Real string_lhs(const RecurrenceTable& table, int n) {
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  const Real g0 = table.gamma(n);
  return 6 * p.c * (g0 * (table.xi(n - 1) + table.xi(n) + table.xi(n + 1)) + table.gamma(n - 1) * g0 * table.gamma(n + 1)) +
         4 * p.t * table.xi(n) - 2 * p.t * g0;
}

Real string_lhs_regrouped(const RecurrenceTable& table, int n) {
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  const Real gm = table.gamma(n - 1), g0 = table.gamma(n), gp = table.gamma(n + 1);
  return 6 * p.c * ((g0 + gm) * table.xi(n) + g0 * table.xi(n + 1) + g0 * gm * table.gamma(n - 2)) +
         4 * p.t * g0 * (gm + g0 + gp) - 2 * p.t * g0;
}

namespace {

void add_string_item(VerificationReport& report, const RecurrenceTable& table, int n) {
  const WeightParams& p = table.params;
  if (n < 1 || n > table.max_n() - 2) {
    throw RangeError("check_string_equation: n=" + std::to_string(n) + " needs 1 <= n <= N-2");
  }
  const Real rhs = n + p.alpha() * RecurrenceTable::omega(n);
  const Real lhs = string_lhs(table, n);
  const Real lhs2 = string_lhs_regrouped(table, n);
  const Real scale = n + p.alpha();
  report.add("n=" + std::to_string(n), relative_residual(lhs - rhs, scale),
             {{"lhs", lhs}, {"rhs", rhs}, {"regrouped_residual", relative_residual(lhs2 - rhs, scale)},
              {"grouping_difference", relative_residual(lhs - lhs2, scale)}});
}

}  // namespace

VerificationReport check_string_equation(const RecurrenceTable& table, int n) {
  return check_string_equation_range(table, n, n);
}

VerificationReport check_string_equation_range(const RecurrenceTable& table, int n_first, int n_last) {
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  VerificationReport report("string", p, p.ctx.tol_identity());
  for (int n = n_first; n <= n_last; ++n) add_string_item(report, table, n);
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_cross_method(const WeightParams& p, int max_n) {
  Stopwatch clock;
  WorkingPrecision scope(p.ctx);
  VerificationReport report("cross_method", p, p.ctx.tol_identity());
  const RecurrenceTable s = gamma_stieltjes(p, max_n);
  const RecurrenceTable h = gamma_hankel(p, max_n);
  for (int n = 1; n <= max_n; ++n) {
    report.add("n=" + std::to_string(n), relative_residual(s.gamma(n) - h.gamma(n), s.gamma(n)),
               {{"stieltjes", s.gamma(n)}, {"hankel", h.gamma(n)}});
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

namespace {

struct TDerivativeTables {
  RecurrenceTable minus, center, plus;
  Real h;
};

TDerivativeTables t_tables(const WeightParams& p, int max_n, std::optional<Real> h_opt) {
  const Real h = h_opt ? at_working_precision(*h_opt) : p.ctx.fd_step();
  return TDerivativeTables{gamma_stieltjes(p.with_t(p.t - h), max_n), gamma_stieltjes(p, max_n),
                           gamma_stieltjes(p.with_t(p.t + h), max_n), h};
}

void add_toda_item(VerificationReport& report, const TDerivativeTables& tt, int n) {
  const RecurrenceTable& c = tt.center;
  const Real fd = (tt.plus.gamma(n) - tt.minus.gamma(n)) / (2 * tt.h);
  const Real gp = c.gamma(n + 1), gm = c.gamma(n - 1);
  const Real xp = c.xi(n + 1), xm = c.xi(n - 1);
  const Real rhs = c.gamma(n) * ((gp - xp) - (gm - xm));
  const Real scale = c.gamma(n) * (abs(gp) + abs(xp) + abs(gm) + abs(xm));
  report.add("n=" + std::to_string(n), relative_residual(fd - rhs, scale), {{"finite_difference", fd}, {"formula", rhs}});
}

}  // namespace

VerificationReport check_toda(const WeightParams& p, int n, std::optional<Real> h) {
  if (n < 1) throw RangeError("check_toda: n must be at least 1");
  Stopwatch clock;
  WorkingPrecision scope(p.ctx);
  const auto tt = t_tables(p, n + 2, h);
  VerificationReport report("toda", p, std::max(Real(tt.h * tt.h), p.ctx.tol_identity()));
  add_toda_item(report, tt, n);
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_toda_range(const WeightParams& p, int n_max, std::optional<Real> h) {
  if (n_max < 1) throw RangeError("check_toda_range: n_max must be at least 1");
  Stopwatch clock;
  WorkingPrecision scope(p.ctx);
  const auto tt = t_tables(p, n_max + 2, h);
  VerificationReport report("toda", p, std::max(Real(tt.h * tt.h), p.ctx.tol_identity()));
  for (int n = 1; n <= n_max; ++n) add_toda_item(report, tt, n);
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

Real dde2_rhs(const RecurrenceTable& table, int n) {
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  if (n + 4 > table.max_n()) throw RangeError("dde2_rhs: needs gamma up to n+4");
  const Real g = table.gamma(n);
  const Real a1 = table.gamma(n - 1), a2 = table.gamma(n - 2), a3 = table.gamma(n - 3), a4 = table.gamma(n - 4);
  const Real b1 = table.gamma(n + 1), b2 = table.gamma(n + 2), b3 = table.gamma(n + 3), b4 = table.gamma(n + 4);
  const Real theta = 2 * p.t * g * (2 * (a1 + g + b1) - 1);
  const int omega = RecurrenceTable::omega(n);

  const Real c4 = -a1 - b1;
  const Real c3 = -a2 * a1 - a1 * a1 - 6 * a1 * b1 - b1 * b1 - b1 * b2 + 2 * a1 + 2 * b1;
  const Real c2 = a3 * a2 * a1 + a2 * a2 * a1 + 2 * a2 * a1 * a1 - 4 * a2 * a1 * b1 + a1 * a1 * a1 -
                  5 * a1 * a1 * b1 - 4 * a1 * b1 * b2 - 5 * a1 * b1 * b1 + b1 * b1 * b1 + 2 * b1 * b1 * b2 +
                  b1 * b2 * b2 + b1 * b2 * b3 + 8 * a1 * b1 - a1 - b1;
  const Real c1 = a4 * a3 * a2 * a1 + a3 * a3 * a2 * a1 + 2 * a3 * a2 * a2 * a1 + 2 * a3 * a2 * a1 * a1 +
                  a2 * a2 * a2 * a1 + 3 * a2 * a2 * a1 * a1 + 3 * a2 * a1 * a1 * a1 - 2 * a2 * a1 * b1 * b1 -
                  2 * a2 * a1 * b1 * b2 + a1 * a1 * a1 * a1 - 2 * a1 * a1 * b1 * b1 - 2 * a1 * a1 * b1 * b2 +
                  b1 * b1 * b1 * b1 + 3 * b1 * b1 * b1 * b2 + 3 * b1 * b1 * b2 * b2 + 2 * b1 * b1 * b2 * b3 +
                  b1 * b2 * b2 * b2 + 2 * b1 * b2 * b2 * b3 + b1 * b2 * b3 * b3 - 2 * a2 * a2 * a1 +
                  b1 * b2 * b3 * b4 - 2 * a3 * a2 * a1 - 4 * a2 * a1 * a1 + 2 * a2 * a1 * b1 - 2 * a1 * a1 * a1 +
                  2 * a1 * a1 * b1 + 2 * a1 * b1 * b1 + 2 * a1 * b1 * b2 - 2 * b1 * b1 * b1 - 4 * b1 * b1 * b2 -
                  g * g - 2 * b1 * b2 * b2 - 2 * b1 * b2 * b3 - 2 * a1 * b1 - 2 * g * a1 - 2 * g * b1 - b1 * a1;

  const Real g2 = g * g;
  return (n + p.alpha() * omega - theta) / (6 * p.c) + c4 * g2 * g2 + c3 * g2 * g + c2 * g2 + c1 * g;
}

namespace {

void add_dde2_item(VerificationReport& report, const TDerivativeTables& tt, int n) {
  const Real h = tt.h;
  const Real gm = tt.minus.gamma(n), g0 = tt.center.gamma(n), gp = tt.plus.gamma(n);
  const Real rhs = dde2_rhs(tt.center, n);
  const Real second = (gp - 2 * g0 + gm) / (h * h);
  const Real first = (gp - gm) / (2 * h);
  const Real square = (gp * gp - gm * gm) / (2 * h);
  auto rel = [&](const Real& lhs) { return relative_residual(lhs - rhs, std::max(abs(lhs), abs(rhs))); };
  const Real r2 = rel(second), r1 = rel(first), rs = rel(square);
  report.add("n=" + std::to_string(n), std::min({r2, r1, rs}),
             {{"rhs", rhs},
              {"d2gamma_dt2", second},
              {"dgamma_dt", first},
              {"dgamma2_dt", square},
              {"residual_second_derivative", r2},
              {"residual_first_derivative", r1},
              {"residual_derivative_of_square", rs}});
  const std::string label = "n=" + std::to_string(n) + ": ";
  bool any = false;
  if (r2 <= report.tolerance) { report.note(label + "matched d2gamma_dt2"); any = true; }
  if (r1 <= report.tolerance) { report.note(label + "matched dgamma_dt"); any = true; }
  if (rs <= report.tolerance) { report.note(label + "matched dgamma2_dt"); any = true; }
  if (!any) report.note(label + "no reading matched");
}

VerificationReport dde2_report(const WeightParams& p, int n_first, int n_last, std::optional<Real> h) {
  if (n_first < 1) throw RangeError("check_second_order_dde: n must be at least 1");
  Stopwatch clock;
  WorkingPrecision scope(p.ctx);
  const auto tt = t_tables(p, n_last + 4, h);
  // The second difference carries O(h^2) truncation and O(eps/h^2) rounding.
  VerificationReport report("dde2", p, std::max(Real(tt.h * tt.h), p.ctx.tol_identity()));
  report.gating = false;
  for (int n = n_first; n <= n_last; ++n) add_dde2_item(report, tt, n);
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

}  // namespace

VerificationReport check_second_order_dde(const WeightParams& p, int n, std::optional<Real> h) {
  return dde2_report(p, n, n, h);
}

VerificationReport check_second_order_dde_range(const WeightParams& p, int n_max, std::optional<Real> h) {
  return dde2_report(p, 1, n_max, h);
}

}  // namespace freud

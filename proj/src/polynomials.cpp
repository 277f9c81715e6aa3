#include "freud/polynomials.hpp"

#include "freud/errors.hpp"

#include <algorithm>
#include <functional>

namespace freud {

namespace {

void require_n(const RecurrenceTable& table, int n, const char* who) {
  if (n < 0 || n > table.max_n()) {
    throw RangeError(std::string(who) + ": n=" + std::to_string(n) + " outside 0.." + std::to_string(table.max_n()));
  }
}

// Leading principal minors of a symmetric positive definite matrix, sizes 0..size.
std::vector<Real> leading_minors(std::vector<std::vector<Real>> a) {
  const std::size_t size = a.size();
  std::vector<Real> minors{Real(1)};
  for (std::size_t k = 0; k < size; ++k) {
    const Real pivot = a[k][k];
    if (!(pivot > 0)) throw PrecisionError("non-positive pivot in moment determinant", static_cast<int>(k + 1), 0);
    minors.push_back(minors.back() * pivot);
    for (std::size_t i = k + 1; i < size; ++i) {
      const Real f = a[i][k] / pivot;
      for (std::size_t j = k + 1; j < size; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return minors;
}

Real inner(const Poly& a, const Poly& b, const MomentTable& m, Real* magnitude = nullptr) {
  const Poly prod = a * b;
  Real sum = 0, mag = 0;
  for (int i = 0; i <= prod.degree(); i += 2) {
    const Real term = prod.coeff(i) * m.eta(i);
    sum += term;
    mag += abs(term);
  }
  if (magnitude) *magnitude = mag;
  return sum;
}

}  // namespace

std::vector<Poly> build_S_family(const RecurrenceTable& table, int n) {
  require_n(table, n, "build_S_family");
  WorkingPrecision scope(table.params.ctx);
  std::vector<Poly> s{Poly{Real(1)}};
  if (n >= 1) s.push_back(Poly::monomial(1));
  for (int k = 1; k < n; ++k) s.push_back(s[k].shifted(1) - table.gamma(k) * s[k - 1]);
  return s;
}

PolynomialRep build_Sn(const RecurrenceTable& table, int n) {
  auto family = build_S_family(table, n);
  return PolynomialRep{n, std::move(family.back()), n % 2 == 0 ? Parity::even : Parity::odd};
}

Real chi(const RecurrenceTable& table, int n) {
  require_n(table, n, "chi");
  WorkingPrecision scope(table.params.ctx);
  Real sum = 0;
  for (int k = 0; k < n; ++k) sum -= table.gamma(k);
  return sum;
}

Real psi_coeff(const RecurrenceTable& table, int k, int q) {
  require_n(table, q, "psi_coeff");
  if (k < 0 || k > q / 2) throw RangeError("psi_coeff: need 0 <= k <= floor(q/2)");
  WorkingPrecision scope(table.params.ctx);
  // row[j] holds Psi_level(j) for j = 0..q; Psi_level vanishes below j = 2 level.
  std::vector<Real> row(static_cast<std::size_t>(q) + 1, Real(1));
  for (int level = 1; level <= k; ++level) {
    std::vector<Real> next(row.size(), Real(0));
    for (int j = 2 * level - 1; j < q; ++j) {
      next[static_cast<std::size_t>(j + 1)] = next[static_cast<std::size_t>(j)] - table.gamma(j) * row[static_cast<std::size_t>(j - 1)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(q)];
}

Real psi_closed_form(const RecurrenceTable& table, int k, int q, IndexBase base) {
  require_n(table, q, "psi_closed_form");
  if (k < 0 || k > q / 2) throw RangeError("psi_closed_form: need 0 <= k <= floor(q/2)");
  WorkingPrecision scope(table.params.ctx);
  if (k == 0) return Real(1);
  // inner[lo] = sum over j_i >= lo of the nested sums from level i inward.
  std::vector<Real> inner(static_cast<std::size_t>(q) + 3, Real(1));
  for (int i = k; i >= 1; --i) {
    const int upper = q + 2 * i - 1 - 2 * k;
    std::vector<Real> acc(static_cast<std::size_t>(q) + 3, Real(0));
    for (int lo = upper; lo >= 0; --lo) {
      const Real rest = lo + 2 <= q + 2 ? inner[static_cast<std::size_t>(lo + 2)] : Real(0);
      acc[static_cast<std::size_t>(lo)] = acc[static_cast<std::size_t>(lo + 1)] + table.gamma(lo) * rest;
    }
    inner = std::move(acc);
  }
  const Real value = inner[base == IndexBase::zero ? 0 : 1];
  return k % 2 == 0 ? value : Real(-value);
}

VerificationReport check_psi_forms(const RecurrenceTable& table, int q_max) {
  require_n(table, q_max, "check_psi_forms");
  Stopwatch clock;
  WorkingPrecision scope(table.params.ctx);
  VerificationReport report("psi_forms", table.params, table.params.ctx.tol_quadrature());
  const auto family = build_S_family(table, q_max);
  for (int q = 0; q <= q_max; ++q) {
    for (int k = 0; k <= q / 2; ++k) {
      const Real extracted = family[static_cast<std::size_t>(q)].coeff(q - 2 * k);
      const Real rec = psi_coeff(table, k, q);
      const Real one = psi_closed_form(table, k, q, IndexBase::one);
      const Real zero = psi_closed_form(table, k, q, IndexBase::zero);
      const Real scale = abs(extracted);
      const Real r = std::max({relative_residual(rec - extracted, scale), relative_residual(one - extracted, scale)});
      report.add("q=" + std::to_string(q) + ",k=" + std::to_string(k), r,
                 {{"extracted", extracted},
                  {"recursion", rec},
                  {"closed_form_base1", one},
                  {"closed_form_base0", zero},
                  {"base_difference", relative_residual(one - zero, scale)}});
    }
  }
  report.note("closed form compared with the outer index starting at 1 (gated) and at 0 (reported)");
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_wqr_form(const RecurrenceTable& table, int q) {
  if (q < 0 || q > 12) throw PreconditionError("check_wqr_form: q must be in 0..12");
  require_n(table, q, "check_wqr_form");
  Stopwatch clock;
  WorkingPrecision scope(table.params.ctx);
  VerificationReport report("wqr_form", table.params, table.params.ctx.tol_quadrature());
  const PolynomialRep s = build_Sn(table, q);
  report.add("leading", s.coeffs.coeff(q) - 1);
  for (int r = 1; r <= q / 2; ++r) {
    Real sum = 0;
    long count = 0;
    std::vector<int> k(static_cast<std::size_t>(r));
    std::function<void(int, int, const Real&)> walk = [&](int level, int lo, const Real& prod) {
      if (level == r) {
        sum += prod;
        ++count;
        return;
      }
      for (int j = lo; j < q; ++j) walk(level + 1, j + 2, prod * table.gamma(j));
    };
    walk(0, 1, Real(1));
    const Real predicted = r % 2 == 0 ? sum : Real(-sum);
    const Real coeff = s.coeffs.coeff(q - 2 * r);
    report.add("r=" + std::to_string(r), relative_residual(predicted - coeff, coeff),
               {{"enumerated", predicted}, {"coefficient", coeff}, {"index_sets", Real(count)}});
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

Real norm_Gamma(const RecurrenceTable& table, int n) {
  require_n(table, n, "norm_Gamma");
  WorkingPrecision scope(table.params.ctx);
  const MomentTable m = moment_table(table.params, n, MomentMethod::series);
  Real sum = 0;
  for (int k = 0; k <= n / 2; ++k) sum += psi_coeff(table, k, n) * m.eta(2 * n - 2 * k);
  return sum;
}

VerificationReport check_norms(const RecurrenceTable& table, int n_max) {
  require_n(table, n_max, "check_norms");
  Stopwatch clock;
  WorkingPrecision scope(table.params.ctx);
  VerificationReport report("norms", table.params, table.params.ctx.tol_identity());
  for (int n = 0; n <= n_max; ++n) {
    const Real via_psi = norm_Gamma(table, n);
    const Real stored = table.norm(n);
    report.add("n=" + std::to_string(n), relative_residual(via_psi - stored, stored),
               {{"psi_sum", via_psi}, {"inner_product", stored}});
    if (n >= 1) {
      const Real ratio = stored - table.gamma(n) * table.norm(n - 1);
      report.add("ratio n=" + std::to_string(n), relative_residual(ratio, stored));
    }
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

SymmetrizedPair symmetrize(const RecurrenceTable& table, int m) {
  if (m < 0 || 2 * m + 1 > table.max_n()) throw RangeError("symmetrize: need 2m+1 <= N");
  WorkingPrecision scope(table.params.ctx);
  const auto family = build_S_family(table, 2 * m + 1);
  const Poly& even = family[static_cast<std::size_t>(2 * m)];
  const Poly& odd = family[static_cast<std::size_t>(2 * m + 1)];
  std::vector<Real> pt, ph;
  for (int j = 0; j <= m; ++j) {
    pt.push_back(even.coeff(2 * j));
    ph.push_back(odd.coeff(2 * j + 1));
  }
  return SymmetrizedPair{m, Poly(std::move(pt)), Poly(std::move(ph)), table.norm(2 * m), table.norm(2 * m + 1)};
}

VerificationReport check_symmetrized(const RecurrenceTable& table, int m) {
  Stopwatch clock;
  const WeightParams& p = table.params;
  WorkingPrecision scope(p.ctx);
  VerificationReport report("symmetrized", p, p.ctx.tol_identity());
  const SymmetrizedPair pair = symmetrize(table, m);
  const auto mu1 = airy_moment_table(p, 2 * m, AiryWeight::w1);
  const auto mu2 = airy_moment_table(p, 2 * m, AiryWeight::w2);
  auto pairing = [](const Poly& a, const Poly& b, const std::vector<Real>& mu, Real& mag) {
    const Poly prod = a * b;
    Real sum = 0;
    mag = 0;
    for (int i = 0; i <= prod.degree(); ++i) {
      sum += prod.coeff(i) * mu[static_cast<std::size_t>(i)];
      mag += abs(prod.coeff(i) * mu[static_cast<std::size_t>(i)]);
    }
    return sum;
  };
  Real mag;
  for (int j = 0; j < m; ++j) {
    const Poly xi_j = Poly::monomial(j);
    const Real a = pairing(pair.ptilde, xi_j, mu1, mag);
    report.add("w1 j=" + std::to_string(j), relative_residual(a, mag));
    const Real b = pairing(pair.phat, xi_j, mu2, mag);
    report.add("w2 j=" + std::to_string(j), relative_residual(b, mag));
  }
  const Real ht = pairing(pair.ptilde, pair.ptilde, mu1, mag);
  report.add("h_tilde", relative_residual(ht - pair.h_tilde, pair.h_tilde), {{"quadrature", ht}, {"table", pair.h_tilde}});
  const Real hh = pairing(pair.phat, pair.phat, mu2, mag);
  report.add("h_hat", relative_residual(hh - pair.h_hat, pair.h_hat), {{"quadrature", hh}, {"table", pair.h_hat}});
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

namespace {

void hankel_product_items(const WeightParams& p, int n, VerificationReport& report) {
  WorkingPrecision scope(p.ctx);
  const RecurrenceTable table = gamma_stieltjes(p, std::max(n, 1));
  const int kt = (n + 1) / 2;  // largest D~ index needed
  const int kh = n / 2;        // largest D^ index needed
  const auto mu1 = airy_moment_table(p, std::max(0, 2 * kt - 2), AiryWeight::w1);
  const auto mu2 = airy_moment_table(p, std::max(0, 2 * kh - 2), AiryWeight::w2);
  auto matrix = [](const std::vector<Real>& mu, int size) {
    std::vector<std::vector<Real>> a(static_cast<std::size_t>(size), std::vector<Real>(static_cast<std::size_t>(size)));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) a[i][j] = mu[static_cast<std::size_t>(i + j)];
    return a;
  };
  const auto dt = leading_minors(matrix(mu1, kt));
  const auto dh = kh > 0 ? leading_minors(matrix(mu2, kh)) : std::vector<Real>{Real(1)};
  Real delta = 1;
  for (int j = 1; j <= n; ++j) {
    delta *= table.norm(j - 1);
    const int k = j / 2;
    const Real det = j % 2 == 0 ? Real(dt[static_cast<std::size_t>(k)] * dh[static_cast<std::size_t>(k)])
                                : Real(dt[static_cast<std::size_t>(k + 1)] * dh[static_cast<std::size_t>(k)]);
    report.add("n=" + std::to_string(j), relative_residual(delta - det, delta),
               {{"norm_product", delta}, {"determinant_product", det}});
  }
}

}  // namespace

VerificationReport check_hankel_product(const WeightParams& p, int n) {
  if (n < 1 || n > 14) throw PreconditionError("check_hankel_product: n must be in 1..14");
  Stopwatch clock;
  WorkingPrecision scope(p.ctx);
  VerificationReport report("hankel", p, p.ctx.tol_identity());
  try {
    hankel_product_items(p, n, report);
  } catch (const PrecisionError&) {
    report.items.clear();
    report.note("determinant pivot failed; retried with raised precision");
    hankel_product_items(p.with_ctx(p.ctx.raised(p.ctx.guard())), n, report);
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_orthogonality(const RecurrenceTable& table, int n_max) {
  require_n(table, n_max, "check_orthogonality");
  Stopwatch clock;
  WorkingPrecision scope(table.params.ctx);
  VerificationReport report("orthogonality", table.params, table.params.ctx.tol_identity());
  const MomentTable m = moment_table(table.params, n_max, MomentMethod::series);
  const auto family = build_S_family(table, n_max);
  for (int a = 0; a <= n_max; ++a) {
    for (int b = 0; b < a; ++b) {
      const Real v = inner(family[static_cast<std::size_t>(a)], family[static_cast<std::size_t>(b)], m);
      report.add("<S" + std::to_string(a) + ",S" + std::to_string(b) + ">",
                 relative_residual(v, sqrt(table.norm(a) * table.norm(b))), {{"inner_product", v}});
    }
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_telescoping(const RecurrenceTable& table, int n_max) {
  require_n(table, n_max, "check_telescoping");
  Stopwatch clock;
  WorkingPrecision scope(table.params.ctx);
  VerificationReport report("telescoping", table.params, table.params.ctx.tol_quadrature());
  const auto family = build_S_family(table, n_max);
  for (int n = 0; n <= n_max; ++n) {
    const Real c = chi(table, n);
    const Real extracted = n >= 2 ? family[static_cast<std::size_t>(n)].coeff(n - 2) : Real(0);
    report.add("chi n=" + std::to_string(n), relative_residual(c - extracted, abs(c)), {{"chi", c}, {"coefficient", extracted}});
    if (n + 1 <= n_max) {
      const Real diff = c - chi(table, n + 1);
      report.add("gamma n=" + std::to_string(n), relative_residual(diff - table.gamma(n), abs(c) + table.gamma(n)));
    }
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport check_parity(const RecurrenceTable& table, int n_max) {
  require_n(table, n_max, "check_parity");
  Stopwatch clock;
  WorkingPrecision scope(table.params.ctx);
  VerificationReport report("parity", table.params, Real(0));
  const auto family = build_S_family(table, n_max);
  const Real x = Real(7) / 10;
  for (int n = 0; n <= n_max; ++n) {
    const Poly& s = family[static_cast<std::size_t>(n)];
    Real worst = 0;
    for (int i = n - 1; i >= 0; i -= 2) worst = std::max(worst, Real(abs(s.coeff(i))));
    const Real mirrored = n % 2 == 0 ? s(-x) : Real(-s(-x));
    worst = std::max(worst, Real(abs(mirrored - s(x))));
    report.add("n=" + std::to_string(n), worst);
  }
  report.finalize();
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

}  // namespace freud

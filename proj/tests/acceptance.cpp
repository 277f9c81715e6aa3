// Runs the fourteen acceptance criteria over the default parameter grid and
// prints one PASS/FAIL line per criterion. Exit status is 0 iff all pass.

#include "freud/cli.hpp"
#include "freud/ladder.hpp"
#include "freud/moments.hpp"
#include "freud/polynomials.hpp"
#include "freud/recurrence.hpp"
#include "freud/zeros.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace freud;

namespace {

constexpr int kDigits = 120;
constexpr int kN = 30;

struct GridPoint {
  const char* c;
  const char* t;
  const char* sigma;
};

const std::vector<GridPoint> kGrid = {
    {"1", "0", "0"}, {"1", "0", "0.5"}, {"1", "1", "0.5"}, {"1", "-1", "1.5"}, {"0.5", "2", "0.25"}};

struct Case {
  WeightParams p;
  RecurrenceTable table;
  std::string name;
};

// Worst residual seen for one criterion, compared with its threshold.
class Tally {
 public:
  explicit Tally(const char* threshold) {
    WorkingPrecision scope(kDigits);
    threshold_ = parse_real(threshold);
  }

  void observe(const Real& residual, const std::string& where) {
    if (residual > worst_) {
      worst_ = residual;
      worst_at_ = where;
    }
    if (residual > threshold_) ok_ = false;
  }
  void observe(const VerificationReport& r, const std::string& where) {
    for (const auto& item : r.items) observe(item.residual, where + " " + r.check + " " + item.label);
  }
  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok_ = false;
      failures_.push_back(what);
    }
  }

  bool ok() const { return ok_; }
  std::string summary() const {
    std::ostringstream os;
    os << "max=" << format_real(worst_, 3) << " threshold=" << format_real(threshold_, 3);
    if (!worst_at_.empty()) os << " worst at [" << worst_at_ << "]";
    for (const auto& f : failures_) os << "; " << f;
    return os.str();
  }

 private:
  Real threshold_;
  Real worst_ = 0;
  std::string worst_at_;
  bool ok_ = true;
  std::vector<std::string> failures_;
};

Real extra(const ReportItem& item, const std::string& name) {
  for (const auto& [key, value] : item.extras)
    if (key == name) return value;
  return Real(-1);
}

std::vector<Real> union_grid() {
  std::vector<Real> g = ladder_grid();
  for (const auto& x : ode_grid()) g.push_back(x);
  return g;
}

int failures = 0;

void report_line(int id, const std::string& title, bool ok, const std::string& detail, double seconds) {
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1fs", seconds);
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << "  (" << detail << ", " << timing
            << ")" << std::endl;
  if (!ok) ++failures;
}

void run_criterion(int id, const std::string& title, const std::function<std::pair<bool, std::string>()>& body) {
  Stopwatch clock;
  try {
    const auto [ok, detail] = body();
    report_line(id, title, ok, detail, clock.elapsed_ms() / 1000.0);
  } catch (const std::exception& e) {
    report_line(id, title, false, std::string("exception: ") + e.what(), clock.elapsed_ms() / 1000.0);
  }
}

}  // namespace

int main() {
  std::vector<Case> cases;
  for (const auto& g : kGrid) {
    const WeightParams p = WeightParams::make(g.c, g.t, g.sigma, PrecisionContext(kDigits));
    cases.push_back({p, gamma_stieltjes(p, kN), std::string("(c,t,sigma)=(") + g.c + "," + g.t + "," + g.sigma + ")"});
  }

  run_criterion(1, "moment series vs quadrature, k <= 8", [&] {
    Tally tally("1e-60");
    Stopwatch clock;
    for (const auto& cs : cases) tally.observe(check_moment_agreement(cs.p, 8), cs.name);
    tally.require(clock.elapsed_ms() < 60000.0, "runtime exceeds 1 min");
    return std::pair{tally.ok(), tally.summary()};
  });

  run_criterion(2, "shift identity k <= 6 and t-derivative identity n = 1, 2", [&] {
    Tally shift("1e-60");
    Tally deriv("1e-60");  // max(h^2, 1e-60) with h = 1e-30
    for (const auto& cs : cases) {
      for (int k = 0; k <= 6; ++k) shift.observe(check_shift_identity(cs.p, k), cs.name);
      for (int n = 1; n <= 2; ++n) {
        WorkingPrecision scope(cs.p.ctx);
        deriv.observe(check_derivative_identity(cs.p, n, MomentMethod::series, parse_real("1e-30")), cs.name);
      }
    }
    return std::pair{shift.ok() && deriv.ok(), "shift " + shift.summary() + "; derivative " + deriv.summary()};
  });

  run_criterion(3, "stieltjes vs hankel gamma_n, n <= 20", [&] {
    Tally tally("1e-40");
    for (const auto& cs : cases) tally.observe(check_cross_method(cs.p, 20), cs.name);
    return std::pair{tally.ok(), tally.summary()};
  });

  run_criterion(4, "string equation 1 <= n <= 28, both groupings", [&] {
    Tally residual("1e-60");
    Tally grouping("1e-60");
    for (const auto& cs : cases) {
      const auto r = check_string_equation_range(cs.table, 1, 28);
      residual.observe(r, cs.name);
      for (const auto& item : r.items) {
        grouping.observe(extra(item, "grouping_difference"), cs.name + " " + item.label);
        residual.observe(extra(item, "regrouped_residual"), cs.name + " regrouped " + item.label);
      }
      residual.require(r.items.size() == 28, "missing string items");
    }
    return std::pair{residual.ok() && grouping.ok(), residual.summary() + "; grouping " + grouping.summary()};
  });

  run_criterion(5, "Toda-type flow n <= 15", [&] {
    Tally tally("1e-40");
    Stopwatch clock;
    for (const auto& cs : cases) tally.observe(check_toda_range(cs.p, 15), cs.name);
    tally.require(clock.elapsed_ms() < 300000.0, "runtime exceeds 5 min");
    return std::pair{tally.ok(), tally.summary()};
  });

  run_criterion(6, "ladder lowering relation n <= 10", [&] {
    Tally tally("1e-60");
    for (const auto& cs : cases)
      for (int n = 1; n <= 10; ++n) tally.observe(check_lowering(cs.table, n, ladder_grid()), cs.name);
    return std::pair{tally.ok(), tally.summary()};
  });

  run_criterion(7, "(M1) coefficient-wise n <= 15", [&] {
    Tally tally("1e-110");
    for (const auto& cs : cases)
      for (int n = 0; n <= 15; ++n) tally.observe(check_M1(cs.table, n), cs.name);
    return std::pair{tally.ok(), tally.summary()};
  });

  run_criterion(8, "(M2') compatibility n <= 10", [&] {
    Tally tally("1e-50");
    for (const auto& cs : cases)
      for (int n = 1; n <= 10; ++n) tally.observe(check_M2prime(cs.table, n, ladder_grid()), cs.name);
    return std::pair{tally.ok(), tally.summary()};
  });

  run_criterion(9, "second-order ODE n <= 10 with near-origin balance", [&] {
    Tally tally("1e-50");
    for (const auto& cs : cases)
      for (int n = 1; n <= 10; ++n) {
        const auto r = check_ode(cs.table, n, union_grid());
        tally.observe(r, cs.name);
        const auto near = std::count_if(r.items.begin(), r.items.end(),
                                        [](const ReportItem& i) { return i.label.rfind("near-origin", 0) == 0; });
        tally.require(near == (n % 2 == 1 ? 2 : 0), cs.name + " near-origin points missing for n=" + std::to_string(n));
      }
    return std::pair{tally.ok(), tally.summary()};
  });

  run_criterion(10, "quasi-orthogonality 6 <= n <= 12", [&] {
    Tally coeff("1e-110");
    Tally proj("1e-50");
    for (const auto& cs : cases)
      for (int n = 6; n <= 12; ++n) {
        const auto r = check_quasi(cs.table, n);
        for (const auto& item : r.items) {
          const std::string where = cs.name + " " + item.label;
          if (item.label.rfind("coefficients", 0) == 0) coeff.observe(item.residual, where);
          else proj.observe(item.residual, where);
        }
        const auto q = quasi_coeffs(cs.table, n);
        proj.require(q.at(n) == n, cs.name + " u[n] != n");
        for (int off : {1, 3, 5}) proj.require(q.at(n - off) == 0, cs.name + " odd offset nonzero");
      }
    return std::pair{coeff.ok() && proj.ok(), "coefficients " + coeff.summary() + "; projections " + proj.summary()};
  });

  run_criterion(11, "Hankel product identity n <= 10", [&] {
    Tally tally("1e-40");
    for (const auto& cs : cases) tally.observe(check_hankel_product(cs.p, 10), cs.name);
    return std::pair{tally.ok(), tally.summary()};
  });

  run_criterion(12, "zeros n <= 30, electrostatic residual n <= 12", [&] {
    Tally tally("1e-30");
    for (const auto& cs : cases) {
      for (int n = 1; n <= kN; ++n) {
        const auto r = check_zero_properties(cs.table, n);
        tally.require(r.pass, cs.name + " zero properties fail at n=" + std::to_string(n));
      }
      for (int n = 2; n <= kN; ++n) {
        const auto r = check_interlacing(cs.table, n);
        tally.require(r.pass, cs.name + " interlacing fails at n=" + std::to_string(n));
      }
      for (int n = 2; n <= 12; ++n) tally.observe(electrostatic_residual(cs.table, n), cs.name);
    }
    return std::pair{tally.ok(), tally.summary()};
  });

  run_criterion(13, "second-order differential-recurrence report (informational)", [&] {
    std::vector<VerificationReport> reports;
    std::ostringstream matched;
    bool produced = true;
    for (const auto& cs : cases) {
      auto r = check_second_order_dde_range(cs.p, 8);
      produced = produced && r.items.size() == 8 && !r.gating;
      for (const auto& item : r.items)
        produced = produced && extra(item, "residual_second_derivative") >= 0 &&
                   extra(item, "residual_first_derivative") >= 0 && extra(item, "residual_derivative_of_square") >= 0;
      matched << " " << cs.name << ":" << (r.pass ? "matched" : "unmatched");
      reports.push_back(std::move(r));
    }
    cli::RunConfig cfg;
    cfg.n_max = kN;
    const std::string path = "dde2_report.json";
    std::ofstream(path) << cli::reports_json(cfg, reports);
    return std::pair{produced, "archived " + path + ";" + matched.str()};
  });

  run_criterion(14, "repeated verify runs are byte-identical", [&] {
    const std::vector<const char*> argv = {"freud", "verify", "--c", "1", "--t", "1", "--sigma", "0.5",
                                           "--digits", "120", "--n-max", "30"};
    std::ostringstream out1, out2, err1, err2;
    const int code1 = cli::run(static_cast<int>(argv.size()), argv.data(), out1, err1);
    const int code2 = cli::run(static_cast<int>(argv.size()), argv.data(), out2, err2);
    const bool same = out1.str() == out2.str() && !out1.str().empty();
    return std::pair{same && code1 == code2,
                     "exit codes " + std::to_string(code1) + "/" + std::to_string(code2) + ", " +
                         std::to_string(out1.str().size()) + " bytes" + (same ? " identical" : " differ")};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}

#include "helpers.hpp"

#include "freud/errors.hpp"
#include "freud/moments.hpp"
#include "freud/numerics.hpp"

#include <doctest.h>

using namespace freud;
using test::close;
using test::params;
using test::real;

namespace {

const char* const eta0_ref = "0.89297951156924921121856431365822588137622979265243370031680944253";
const char* const eta2_ref = "0.45137264647546680564842934271817126183977575535226456613134082265";

}  // namespace

TEST_SUITE("moments") {
  TEST_CASE("closed-form moments at t = 0") {
    const auto p = params("1", "0", "0");
    WorkingPrecision scope(p.ctx);
    CHECK(close(moment_series(p, 0), real(eta0_ref), real("1e-63")));
    CHECK(close(moment_series(p, 1), real(eta2_ref), real("1e-63")));
    // eta_{2k}(0; 0) = Gamma((k + 1)/3) / 3
    for (int k = 0; k <= 8; ++k)
      CHECK(close(moment_series(p, k), gamma_fn(Real(k + 1) / 3) / 3, real("1e-110")));
  }

  TEST_CASE("odd moments vanish") {
    const auto p = params("1", "1", "0.5");
    const MomentTable m = moment_table(p, 4);
    for (int order = 1; order < 9; order += 2) CHECK(m.eta(order) == 0);
    CHECK(m.eta(4) == m.values[2]);
    CHECK_THROWS_AS(m.eta(10), RangeError);
    CHECK_THROWS_AS(m.eta(-1), RangeError);
  }

  TEST_CASE("series and quadrature agree") {
    const auto p = params("1", "0", "0");
    for (int k = 0; k <= 6; ++k) {
      WorkingPrecision scope(p.ctx);
      CHECK(close(moment_quadrature(p, k), moment_series(p, k), p.ctx.tol_identity()));
    }
    const auto q = params("1", "1", "0.5");
    {
      WorkingPrecision scope(q.ctx);
      const Real s = moment_series(q, 0);
      CHECK(s > 0);
      CHECK(close(moment_quadrature(q, 0), s, q.ctx.tol_identity()));
    }
    const auto r = params("0.5", "-1", "0.25");
    {
      WorkingPrecision scope(r.ctx);
      CHECK(close(moment_quadrature(r, 2), moment_series(r, 2), r.ctx.tol_identity()));
    }
    const auto report = check_moment_agreement(params("0.5", "2", "0.25"), 8);
    CHECK(report.pass);
    CHECK(report.items.size() == 9);
  }

  TEST_CASE("positivity and log-convexity") {
    const auto p = params("1", "0", "0.5");
    const MomentTable m = moment_table(p, 10);
    WorkingPrecision scope(p.ctx);
    for (int k = 0; k <= 10; ++k) CHECK(m.values[k] > 0);
    for (int k = 1; k < 10; ++k) CHECK(m.values[k] * m.values[k] < m.values[k - 1] * m.values[k + 1]);
    const MomentTable q = moment_table(params("1", "-1", "1.5"), 10, MomentMethod::quadrature);
    for (const auto& v : q.values) CHECK(v > 0);
    CHECK(q.method == MomentMethod::quadrature);
  }

  TEST_CASE("shift identity") {
    CHECK(check_shift_identity(params("1", "0", "0"), 0).max_residual == 0);
    CHECK(check_shift_identity(params("1", "0", "0"), 1).pass);
    CHECK(check_shift_identity(params("1", "2", "0.5"), 3).pass);
    CHECK(check_shift_identity(params("1", "1", "0.5"), 2, MomentMethod::quadrature).pass);
  }

  TEST_CASE("t-derivative identity") {
    const auto a = check_derivative_identity(params("1", "0", "0"), 1);
    CHECK(a.pass);
    CHECK(check_derivative_identity(params("1", "1", "0.5"), 2).pass);
    const auto b = check_derivative_identity(params("1", "0", "0"), 1, MomentMethod::quadrature);
    CHECK(b.pass == a.pass);
    CHECK_THROWS_AS(check_derivative_identity(params("1", "0", "0"), 4), RangeError);
  }

  TEST_CASE("half-line moments") {
    const auto p = params("1", "0", "0");
    WorkingPrecision scope(p.ctx);
    CHECK(close(airy_moment(p, 0, 0, AiryWeight::w1),
                real("0.89297951156924921121856431365822588137622979265243370031680944253"), real("1e-63")));
    CHECK(close(airy_moment(p, 0, 0, AiryWeight::w1), moment_series(p, 0), p.ctx.tol_identity()));
    const auto q = params("1", "1", "0.5");
    CHECK(close(airy_moment(q, 1, 1, AiryWeight::w2), airy_moment(q, 1, 2, AiryWeight::w1), q.ctx.tol_identity()));
    CHECK(close(airy_moment(q, 1, 1, AiryWeight::w1, MomentMethod::series), airy_moment(q, 1, 1, AiryWeight::w1),
                q.ctx.tol_identity()));
    const auto table = airy_moment_table(q, 4, AiryWeight::w1);
    REQUIRE(table.size() == 5);
    CHECK(close(table[3], airy_moment(q, 1, 2, AiryWeight::w1), q.ctx.tol_identity()));
    // int_0^inf xi^k w1(xi) d xi = eta_{2k} through xi = x^2
    CHECK(close(table[2], moment_series(q, 2), q.ctx.tol_identity()));
  }

  TEST_CASE("quadrature cutoff bounds the tail") {
    const auto p = params("1", "2", "0.5");
    const double x = quadrature_cutoff(p, 20);
    CHECK(x > 1.0);
    CHECK(x * x * x * x * x * x - 2 * x * x * x * x - 20 * std::log(x) >= (120 + 20) * std::log(10.0) - 1e-9);
  }
}

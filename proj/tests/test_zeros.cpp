#include "helpers.hpp"

#include "freud/errors.hpp"
#include "freud/ladder.hpp"
#include "freud/polynomials.hpp"
#include "freud/zeros.hpp"

#include <doctest.h>

using namespace freud;
using test::close;
using test::params;
using test::real;

TEST_SUITE("zeros") {
  TEST_CASE("explicit low degrees") {
    const auto table = gamma_stieltjes(params("1", "0", "0"), 10);
    WorkingPrecision scope(table.params.ctx);
    const auto z1 = compute_zeros(table, 1);
    REQUIRE(z1.zeros.size() == 1);
    CHECK(z1.zeros[0] == 0);
    const auto z2 = compute_zeros(table, 2);
    REQUIRE(z2.zeros.size() == 2);
    CHECK(close(z2.zeros[1], sqrt(table.gamma(1)), real("1e-110")));
    CHECK(z2.zeros[0] == -z2.zeros[1]);
    const auto z3 = compute_zeros(table, 3);
    REQUIRE(z3.zeros.size() == 3);
    CHECK(z3.zeros[1] == 0);
    CHECK(close(z3.zeros[2], sqrt(table.gamma(1) + table.gamma(2)), real("1e-110")));
    CHECK(z3.zeros[0] == -z3.zeros[2]);
    CHECK(compute_zeros(table, 0).zeros.empty());
    CHECK_THROWS_AS(compute_zeros(table, 11), RangeError);
  }

  TEST_CASE("zeros are real, simple and symmetric") {
    const auto table = gamma_stieltjes(params("1", "0", "0"), 12);
    const auto r = check_zero_properties(table, 8);
    CHECK(r.pass);
    const auto zs = compute_zeros(table, 8);
    WorkingPrecision scope(table.params.ctx);
    const auto s = build_Sn(table, 8);
    for (std::size_t j = 0; j < zs.zeros.size(); ++j) {
      CHECK(zs.zeros[j] == -zs.zeros[zs.zeros.size() - 1 - j]);
      if (j > 0) CHECK(zs.zeros[j] > zs.zeros[j - 1]);
      CHECK(abs(s(zs.zeros[j])) < real("1e-100"));
    }
    CHECK(zs.pairing_defect <= table.params.ctx.tol_identity());
    for (int n = 1; n <= 12; ++n) CHECK(check_zero_properties(table, n).pass);
  }

  TEST_CASE("interlacing") {
    const auto t0 = gamma_stieltjes(params("1", "0", "0"), 10);
    CHECK(check_interlacing(t0, 2).pass);
    CHECK(check_interlacing(t0, 3).pass);
    const auto t1 = gamma_stieltjes(params("1", "1", "0.5"), 10);
    CHECK(check_interlacing(t1, 8).pass);
    CHECK_THROWS_AS(check_interlacing(t1, 1), RangeError);
  }

  TEST_CASE("zeros from other gamma sources") {
    const auto p = params("1", "-1", "1.5");
    const auto a = compute_zeros(gamma_stieltjes(p, 10), 9);
    const auto b = compute_zeros(gamma_hankel(p, 10), 9);
    CHECK(b.gamma_source == GammaMethod::hankel);
    WorkingPrecision scope(p.ctx);
    for (std::size_t j = 0; j < a.zeros.size(); ++j) CHECK(close(a.zeros[j], b.zeros[j], p.ctx.tol_identity()));
  }

  TEST_CASE("electrostatic equilibrium") {
    const auto table = gamma_stieltjes(params("1", "0", "0"), 10);
    {
      // 2/(x_1 - x_2) + U_2(x_1) = 0 at x_1 = sqrt(gamma_1)
      WorkingPrecision scope(table.params.ctx);
      const Real x1 = sqrt(table.gamma(1));
      const Real u = ode_coeffs(table, 2, x1).U;
      CHECK(abs(2 / (2 * x1) + u) <= table.params.ctx.tol_electro() * abs(u));
    }
    CHECK(electrostatic_residual(table, 2).pass);
    const auto zs = compute_zeros(table, 6);
    const auto values = electrostatic_values(table, zs);
    REQUIRE(values.size() == 6);
    for (std::size_t j = 0; j < 3; ++j) {
      REQUIRE(values[j].has_value());
      CHECK(close(*values[j], *values[5 - j], real("1e-100")));
    }
    const auto odd = gamma_stieltjes(params("1", "-1", "0.5"), 12);
    const auto r = electrostatic_residual(odd, 9);
    CHECK(r.pass);
    CHECK(r.items.size() == 8);
    const auto zs9 = compute_zeros(odd, 9);
    CHECK_FALSE(electrostatic_values(odd, zs9)[4].has_value());
  }
}

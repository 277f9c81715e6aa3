#include "helpers.hpp"

#include "freud/errors.hpp"
#include "freud/numerics.hpp"

#include <doctest.h>

#include <random>

using namespace freud;
using test::close;
using test::real;

TEST_SUITE("numerics") {
  TEST_CASE("gamma function at known points") {
    WorkingPrecision scope(120);
    CHECK(gamma_fn(Real(1)) == 1);
    CHECK(close(gamma_fn(Real(1) / 2), sqrt(acos(Real(-1))), real("1e-115")));
    CHECK(close(gamma_fn(Real(1) / 3), real("2.6789385347077476336556929409746776441286893779573011009504283276"),
                real("1e-63")));
    CHECK_THROWS_AS(gamma_fn(Real(0)), DomainError);
    CHECK_THROWS_AS(gamma_fn(Real(-1)), DomainError);
  }

  TEST_CASE("gamma function follows the working precision") {
    WorkingPrecision scope(200);
    const Real g = gamma_fn(Real(1) / 2);
    CHECK(abs(g * g - acos(Real(-1))) < real("1e-195"));
  }

  TEST_CASE("functional equation Gamma(x+1) = x Gamma(x)") {
    WorkingPrecision scope(120);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.05, 12.0);
    for (int i = 0; i < 25; ++i) {
      const Real x = dist(rng);
      CHECK(close(gamma_fn(x + 1), x * gamma_fn(x), real("1e-110")));
    }
  }

  TEST_CASE("polynomial evaluation, derivative and product") {
    WorkingPrecision scope(60);
    const Poly p{Real(-1), Real(0), Real(1)};
    CHECK(p(Real(2)) == 3);
    CHECK(poly_eval(p, Real(2)) == 3);
    CHECK(Poly::monomial(3).derivative().coeffs() == Poly{Real(0), Real(0), Real(3)}.coeffs());
    CHECK(poly_mul(Poly::monomial(1), Poly::monomial(1)).coeffs() == Poly::monomial(2).coeffs());
    CHECK(poly_derive(Poly::monomial(0)).is_zero());
    CHECK(poly_add(p, Poly{Real(1), Real(0), Real(-1)}).degree() == -1);
    CHECK(Poly::monomial(2, Real(5)).shifted(3).coeff(5) == 5);
    CHECK(p.coeff(7) == 0);
  }

  TEST_CASE("polynomial arithmetic is consistent pointwise") {
    WorkingPrecision scope(80);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Real> a, b;
      for (int i = 0; i < 6; ++i) a.push_back(dist(rng));
      for (int i = 0; i < 4; ++i) b.push_back(dist(rng));
      const Poly pa(a), pb(b);
      const Real x = dist(rng);
      CHECK(close((pa * pb)(x), pa(x) * pb(x), real("1e-70")));
      CHECK(close((pa + pb)(x), pa(x) + pb(x), real("1e-70")));
      CHECK(close((pa * pb).derivative()(x), pa.derivative()(x) * pb(x) + pa(x) * pb.derivative()(x),
                  real("1e-70")));
    }
  }

  TEST_CASE("tridiagonal eigenvalues: small cases") {
    WorkingPrecision scope(120);
    const Real tol = real("1e-100");
    {
      std::vector<Real> d{Real(0)}, e;
      const auto ev = tridiag_eigenvalues(d, e, tol);
      REQUIRE(ev.size() == 1);
      CHECK(ev[0] == 0);
    }
    {
      const Real b = real("0.7");
      std::vector<Real> d{Real(0), Real(0)}, e{b};
      const auto ev = tridiag_eigenvalues(d, e, tol);
      REQUIRE(ev.size() == 2);
      CHECK(close(ev[0], -b, tol * 10));
      CHECK(close(ev[1], b, tol * 10));
    }
    {
      const Real g1 = real("0.5"), g2 = real("1.3");
      std::vector<Real> d{Real(0), Real(0), Real(0)}, e{sqrt(g1), sqrt(g2)};
      const auto ev = tridiag_eigenvalues(d, e, tol);
      REQUIRE(ev.size() == 3);
      CHECK(close(ev[0], -sqrt(g1 + g2), tol * 10));
      CHECK(abs(ev[1]) <= tol * 10);
      CHECK(close(ev[2], sqrt(g1 + g2), tol * 10));
    }
  }

  TEST_CASE("tridiagonal eigenvalues: trace invariants and Sturm counts") {
    WorkingPrecision scope(100);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> diag_dist(-3.0, 3.0), off_dist(0.1, 2.0);
    for (int trial = 0; trial < 5; ++trial) {
      const int n = 4 + trial * 3;
      std::vector<Real> d, e, e2;
      for (int i = 0; i < n; ++i) d.push_back(diag_dist(rng));
      for (int i = 0; i + 1 < n; ++i) {
        e.push_back(off_dist(rng));
        e2.push_back(e.back() * e.back());
      }
      const auto ev = tridiag_eigenvalues(d, e, real("1e-90"));
      REQUIRE(ev.size() == static_cast<std::size_t>(n));
      Real trace = 0, frob = 0, sum = 0, sum_sq = 0;
      for (int i = 0; i < n; ++i) {
        trace += d[i];
        frob += d[i] * d[i];
        sum += ev[i];
        sum_sq += ev[i] * ev[i];
      }
      for (const auto& x : e2) frob += 2 * x;
      CHECK(close(sum, trace, real("1e-85")));
      CHECK(close(sum_sq, frob, real("1e-85")));
      for (int i = 1; i < n; ++i) CHECK(ev[i] > ev[i - 1]);
      for (int i = 0; i < n; ++i) CHECK(sturm_count(d, e2, ev[i] + real("1e-60")) == i + 1);
    }
  }

  TEST_CASE("tridiagonal eigenvalues reject malformed input") {
    WorkingPrecision scope(60);
    std::vector<Real> d{Real(0), Real(0)}, e{Real(0)}, short_e;
    CHECK_THROWS_AS(tridiag_eigenvalues(d, e, Real("1e-40")), PreconditionError);
    CHECK_THROWS_AS(tridiag_eigenvalues(d, short_e, Real("1e-40")), PreconditionError);
  }

  TEST_CASE("precision context defaults and formatting") {
    const PrecisionContext ctx(120);
    CHECK(ctx.working_digits() > ctx.digits);
    CHECK_THROWS_AS(PrecisionContext(10).validate(), PreconditionError);
    WorkingPrecision scope(ctx);
    CHECK(ctx.tol_quadrature() < ctx.tol_identity());
    CHECK(format_real(Real(0), 10) == "0");
    CHECK(format_real(Real(-2) / 8, 5) == "-2.5000e-01");
    CHECK_THROWS_AS(parse_real("abc"), PreconditionError);
  }

  TEST_CASE("at_working_precision widens low-precision values") {
    Real coarse;
    {
      WorkingPrecision low(20);
      coarse = Real(1) / 3;
    }
    WorkingPrecision scope(100);
    const Real wide = at_working_precision(coarse);
    CHECK(wide.precision() >= 100);
    CHECK(abs(wide * 3 - 1) < real("1e-15"));
  }
}

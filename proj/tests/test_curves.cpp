#include <cmath>
#include <stdexcept>
#include <random>
#include <sstream>

#include <doctest.h>

#include "regret/curves.hpp"

using namespace regret;

namespace {

PayoffCurve linear_curve(int n, double c, double step = 0.125) {
  return tabulate_curve(n, step, true, [c](double x) { return c * x; });
}

PayoffCurve abs_curve(int n, double shift = 0.0, double step = 0.125) {
  return tabulate_curve(n, step, true,
                        [shift](double x) { return std::fabs(x) - shift; });
}

}  // namespace

TEST_CASE("recursion residual vanishes for linear curves") {
  for (double c : {-0.7, 0.0, 1.0, 2.5}) {
    const PayoffCurve f = linear_curve(50, c);
    for (double x : {-30.0, -4.125, 0.0, 1.0, 17.375}) {
      CHECK(std::fabs(recursion_residual(f, x)) < 1e-11);
    }
  }
}

TEST_CASE("zero-regret |x| curve fails at the origin") {
  const PayoffCurve f = abs_curve(100);
  CHECK(recursion_residual(f, 0.0) == doctest::Approx(-1.0 / f.rho()));
  const FeasibilityReport report = check_feasible(f);
  CHECK_FALSE(report.feasible);
  CHECK(report.argmin_x == 0.0);
  CHECK(report.min_margin == doctest::Approx(-1.0 / f.rho()));
}

TEST_CASE("residual out of range throws") {
  const PayoffCurve f = linear_curve(10, 1.0);
  CHECK_THROWS_AS(recursion_residual(f, 11.0), std::domain_error);
  CHECK_NOTHROW(recursion_residual(f, 10.0));  // rho*n + 1 = n exactly
}

TEST_CASE("zero curve is feasible") {
  const PayoffCurve f = linear_curve(25, 0.0);
  const FeasibilityReport report = check_feasible(f);
  CHECK(report.feasible);
  CHECK(report.origin_ok);
  CHECK(report.lipschitz_ok);
  CHECK(std::fabs(report.min_margin) < 1e-12);
}

TEST_CASE("bounded construction: pure linear needs no shift") {
  const auto [curve, shift] = make_feasible_bounded({0, 1}, 100);
  CHECK(shift == 0.0);
  CHECK(curve.value_at(4.0) == doctest::Approx(4.0));
  CHECK(check_feasible(curve, 1e-9).feasible);
}

TEST_CASE("bounded construction: F_{1,0} for n=100") {
  const auto [curve, shift] = make_feasible_bounded({1, 0}, 100);
  CHECK(shift >= 0.0);
  CHECK(shift <= 2.0);
  CHECK(check_feasible(curve, 1e-9).feasible);
  // residual nonnegative across the scanned grid
  const FeasibilityReport report = check_feasible(curve, 1e-9);
  CHECK(report.min_margin >= -1e-9);
}

TEST_CASE("bounded construction: shift does not grow with n") {
  const double k100 = make_feasible_bounded({1, 0}, 100).shift;
  const double k400 = make_feasible_bounded({1, 0}, 400).shift;
  CHECK(k400 <= k100 + 0.5);
}

TEST_CASE("bounded construction feasible across the parameter box") {
  for (double c1 : {0.3, 0.6, 1.0, 2.0}) {
    for (double c2 : {-0.5, 0.0, 0.5}) {
      for (int n : {25, 100}) {
        const auto built = make_feasible_bounded({c1, c2}, n);
        CHECK(check_feasible(built.curve, 1e-9).feasible);
      }
    }
  }
}

TEST_CASE("unbounded construction: linear needs no damping") {
  const auto [curve, beta] = make_feasible_unbounded({0, 1}, 100);
  CHECK(beta == 0.0);
  CHECK_FALSE(curve.bounded_bets);
}

TEST_CASE("unbounded construction: F_{1,0} for n=100") {
  const auto [curve, beta] = make_feasible_unbounded({1, 0}, 100);
  CHECK(beta <= 64.0);
  PayoffCurve c = curve;
  CHECK(check_feasible(c, 1e-9).feasible);
  // induced bets exceed 1 somewhere near the edge of the domain
  double max_bet = 0.0;
  const double rho = c.rho();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double x = c.x_at(i);
    if (!c.in_range(rho * x + 1) || !c.in_range(rho * x - 1)) continue;
    max_bet = std::max(
        max_bet, std::fabs(c.value_at(rho * x + 1) - c.value_at(rho * x - 1)) / 2);
  }
  CHECK(max_bet > 1.0);
}

TEST_CASE("differential residual: closed forms") {
  const double h = 1e-3;
  const int m = 4001;  // [-2, 2]
  std::vector<double> lin(m), quad(m);
  for (int i = 0; i < m; ++i) {
    const double x = (i - (m - 1) / 2) * h;
    lin[i] = x;
    quad[i] = x * x;
  }
  CHECK(std::fabs(differential_residual(lin, h, 0.5)) < 1e-9);
  // g = x^2: residual 2 - 2x^2
  CHECK(differential_residual(quad, h, 0.0) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(differential_residual(quad, h, 1.5) ==
        doctest::Approx(2.0 - 2 * 1.5 * 1.5).epsilon(1e-6));
  CHECK_THROWS_AS(differential_residual(lin, h, 2.0), std::domain_error);
}

TEST_CASE("differential residual vanishes on exact Hermite solutions") {
  const double h = 1e-3;
  const int m = 4401;  // [-2.2, 2.2]
  const HermiteParams p{1.0, -0.5};
  std::vector<double> g(m);
  for (int i = 0; i < m; ++i) {
    g[i] = hermite_payoff(p, (i - (m - 1) / 2) * h);
  }
  // truncation is O(h^2 g'''') and g'''' reaches ~1e4 near |x| = 2
  for (double x : {-2.0, -0.9, 0.0, 0.4, 2.0}) {
    CHECK(std::fabs(differential_residual(g, h, x)) < 1e-3);
  }
}

TEST_CASE("dominating hermite recovers its own parameters") {
  const double h = 0.01;
  const int m = 401;  // [-2, 2]
  const HermiteParams p{1.0, 2.0};
  std::vector<double> g(m);
  for (int i = 0; i < m; ++i) g[i] = hermite_payoff(p, (i - (m - 1) / 2) * h);
  const DominationResult r = dominating_hermite(g, h);
  CHECK(r.params.c1 == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.params.c2 == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(r.dominated);
  CHECK(std::fabs(r.max_violation) < 1e-4);
}

TEST_CASE("dominating hermite: shifted-down curve stays dominated") {
  const double h = 0.01;
  const int m = 401;
  std::vector<double> g(m);
  for (int i = 0; i < m; ++i) {
    g[i] = hermite_payoff({1, 0}, (i - (m - 1) / 2) * h) - 0.1;
  }
  CHECK(dominating_hermite(g, h).dominated);
}

TEST_CASE("dominating hermite rejects x^2 on a wide grid") {
  const double h = 0.01;
  const int m = 801;  // [-4, 4]
  std::vector<double> g(m);
  for (int i = 0; i < m; ++i) {
    const double x = (i - (m - 1) / 2) * h;
    g[i] = x * x;
  }
  CHECK_FALSE(dominating_hermite(g, h).dominated);
}

TEST_CASE("regret and loss functionals") {
  const PayoffCurve zero = linear_curve(50, 0.0);
  CHECK(regret_of(zero) == doctest::Approx(50.0));
  CHECK(loss_of(zero) == doctest::Approx(0.0));
  const PayoffCurve shifted = abs_curve(50, 5.0);
  CHECK(regret_of(shifted) == doctest::Approx(5.0));
  CHECK(loss_of(shifted) == doctest::Approx(5.0));
}

TEST_CASE("equality rigidity: F-based curves have strictly positive residual") {
  const int n = 100;
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const PayoffCurve f = tabulate_curve(n, 0.125, false, [&](double x) {
    return std::fabs(x / sqrt_n) <= 2.0 ? sqrt_n * hermite_payoff({1, 0}, x / sqrt_n)
                                        : 0.0;
  });
  double max_res = 0.0;
  for (double x = -sqrt_n; x <= sqrt_n; x += 0.125) {
    max_res = std::max(max_res, recursion_residual(f, x));
  }
  CHECK(max_res > 1e-6);
}

TEST_CASE("scaling consistency: residual deficit shrinks like n^{-3/2}") {
  // direct evaluation, no grid interpolation: the Taylor error of the
  // undamped f(x) = sqrt(n) F(x/sqrt(n)) is worst at the origin
  auto worst_deficit = [](int n) {
    const double rho = 1.0 - 1.0 / n;
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    auto f = [&](double x) { return sqrt_n * hermite_payoff({1, 0}, x / sqrt_n); };
    double deficit = 0.0;
    for (double y = -1.5; y <= 1.5; y += 0.125) {
      const double x = y * sqrt_n;
      deficit = std::min(deficit, f(x) - (f(rho * x + 1) + f(rho * x - 1)) / (2 * rho));
    }
    return -deficit;
  };
  const double d100 = worst_deficit(100);
  const double d400 = worst_deficit(400);
  CHECK(d100 == doctest::Approx(9.52e-5).epsilon(0.05));
  CHECK(d400 < d100 / 4);
}

TEST_CASE("shift invariance of induced bets; larger K keeps feasibility") {
  auto built = make_feasible_bounded({1, 0}, 100);
  PayoffCurve moved = built.curve;
  for (double& v : moved.values) v -= 1.0;
  CHECK(check_feasible(moved, 1e-9).feasible);
  // induced bets unchanged by the shift
  const double rho = moved.rho();
  for (double x : {-20.0, 0.0, 13.5}) {
    const double b0 = (built.curve.value_at(rho * x + 1) - built.curve.value_at(rho * x - 1)) / 2;
    const double b1 = (moved.value_at(rho * x + 1) - moved.value_at(rho * x - 1)) / 2;
    CHECK(b0 == doctest::Approx(b1).epsilon(1e-12));
  }
}

TEST_CASE("curve CSV round trip") {
  const auto built = make_feasible_bounded({0.6, 0.5}, 25);
  std::stringstream buffer;
  write_curve_csv(buffer, built.curve);
  const PayoffCurve back = read_curve_csv(buffer);
  REQUIRE(back.size() == built.curve.size());
  CHECK(back.n == built.curve.n);
  CHECK(back.grid_step == built.curve.grid_step);
  CHECK(back.bounded_bets == built.curve.bounded_bets);
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back.values[i] == built.curve.values[i]);
  }
}

TEST_CASE("grid step must be dyadic") {
  CHECK_THROWS_AS(make_feasible_bounded({1, 0}, 25, 0.3), std::invalid_argument);
}

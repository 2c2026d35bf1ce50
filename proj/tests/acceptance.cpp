// Acceptance gate: one check per release criterion, each printing a
// single pass/fail line. Exit code 0 only if every criterion holds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "regret/curves.hpp"
#include "regret/dp.hpp"
#include "regret/multiscale.hpp"
#include "regret/sim.hpp"
#include "regret/specfun.hpp"
#include "regret/strategies.hpp"
#include "regret/tradeoff.hpp"

using namespace regret;

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

std::vector<BigInt> binomial_row(int T) {
  std::vector<BigInt> row(T + 1, 1);
  for (int i = 1; i <= T; ++i) row[i] = row[i - 1] * (T - i + 1) / i;
  return row;
}

// --- 1. fixed-horizon optimal regret --------------------------------------

bool fixed_horizon_regret() {
  for (int T = 1; T <= 20; ++T) {
    const Rational mean = expected_abs_height(T);
    const DPTable table = minimax_table(T, [&](long x) {
      return Rational(x < 0 ? -x : x) - mean;
    });
    if (table.s(0, 0) != Rational(0)) return false;
    for (int t = 0; t < T; ++t) {
      for (long x = -t; x <= t; x += 2) {
        if (table.bet(t, x) > Rational(1) || table.bet(t, x) < Rational(-1)) {
          return false;
        }
      }
    }
  }
  const double ratio =
      static_cast<double>(expected_abs_height(20)) / std::sqrt(20.0);
  return ratio >= 0.75 && ratio <= 0.85;
}

// --- 2. terminal-payoff characterization ----------------------------------

bool terminal_characterization() {
  const int T = 12;
  const auto binom = binomial_row(T);
  const BigInt two_T = BigInt(1) << T;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> delta(-2, 2);
  std::uniform_int_distribution<int> pick(0, T);
  for (int trial = 0; trial < 100; ++trial) {
    // random walk over consecutive reachable heights, steps within +-2
    std::vector<Rational> g(T + 1);
    for (int i = 1; i <= T; ++i) g[i] = g[i - 1] + delta(rng);
    Rational mean = 0;
    for (int i = 0; i <= T; ++i) mean += Rational(binom[i]) * g[i];
    mean /= Rational(two_T);
    Terminal centered = [&](long x) { return g[(x + T) / 2] - mean; };
    if (minimax_table(T, centered).s(0, 0) != Rational(0)) return false;

    const int k = pick(rng);
    Terminal bumped = [&](long x) {
      Rational v = centered(x);
      if ((x + T) / 2 == k) v += 1;
      return v;
    };
    const Rational expected(binom[k], two_T);
    if (minimax_table(T, bumped).s(0, 0) != expected) return false;
    if (expected == Rational(0)) return false;
  }
  return true;
}

// --- 3. special-function machinery ----------------------------------------

bool hermite_machinery() {
  // fourth-order stencils keep both truncation and cancellation below
  // the 1e-6 budget across the parameter box
  const double h = 1e-3;
  for (double c1 : {0.0, 1.0, 10.0}) {
    for (double c2 : {-10.0, 0.0, 10.0}) {
      const HermiteParams p{c1, c2};
      for (double x = -2.0; x <= 2.0; x += 0.125) {
        auto f = [&](double u) { return hermite_payoff(p, u); };
        const double g2 = (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) +
                           16 * f(x - h) - f(x - 2 * h)) /
                          (12 * h * h);
        const double g1 =
            (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) /
            (12 * h);
        if (std::fabs(g2 - 2 * x * g1 + 2 * f(x)) > 1e-6) return false;
      }
    }
  }

  // Gaussian-weight orthogonality on the line; the [-L, L] truncation
  // has the exact tail -c1 (2/pi) D(L), which we add back
  const double L = 6.0;
  const int m = 24000;
  for (double c1 : {0.5, 1.0, 3.0}) {
    for (double c2 : {-1.0, 0.0, 2.0}) {
      const HermiteParams p{c1, c2};
      auto f = [&](double x) {
        return hermite_payoff(p, x) * std::exp(-x * x) / kSqrtPi;
      };
      const double step = 2 * L / m;
      double sum = f(-L) + f(L);
      for (int i = 1; i < m; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(-L + i * step);
      const double integral = sum * step / 3.0;
      if (std::fabs(integral + c1 * 2.0 / M_PI * dawson(L)) > 1e-6) return false;
    }
  }

  // erfi(1) against composite-Simpson quadrature of its definition
  const int q = 20000;
  const double qh = 1.0 / q;
  double qs = 1.0 + std::exp(1.0);
  for (int i = 1; i < q; ++i) qs += (i % 2 ? 4.0 : 2.0) * std::exp(qh * i * qh * i);
  const double quad = qs * qh / 3.0 * 2.0 / kSqrtPi;
  return std::fabs(erfi(1.0) - quad) < 1e-10;
}

// --- 4. steady-state feasibility ------------------------------------------

bool walk_guarantee(const Strategy& s, const PayoffCurve& f, double rho,
                    double h, double a, int depth) {
  if (a < f.value_at(h) - 1e-9) return false;
  if (depth == 0) return true;
  const double bet = s.bet(h);
  return walk_guarantee(s, f, rho, rho * h + 1, rho * a + bet, depth - 1) &&
         walk_guarantee(s, f, rho, rho * h - 1, rho * a - bet, depth - 1);
}

bool steady_state_feasibility() {
  double k100 = 0, k400 = 0;
  for (int n : {25, 100, 400}) {
    const auto built = make_feasible_bounded({1, 0}, n);
    if (built.shift > 2.0) return false;
    if (n == 100) k100 = built.shift;
    if (n == 400) k400 = built.shift;
  }
  if (k400 > k100 + 0.5) return false;

  const int n = 25;
  const auto built = make_feasible_bounded({1, 0}, n);
  const Strategy s = Strategy::curve_induced(built.curve);
  return walk_guarantee(s, built.curve, 1.0 - 1.0 / n, 0.0, 0.0, 16);
}

// --- 5. the optimal constant ----------------------------------------------

bool optimal_constant() {
  const double C = optimal_regret_constant();
  double lo = 0.5, hi = 1.5;  // positive root of F_{1,0} by bisection
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (hermite_payoff({1, 0}, mid) < 0 ? lo : hi) = mid;
  }
  if (std::fabs(C - 0.5 * (lo + hi)) > 1e-8) return false;

  const int n = 400;
  const auto built = make_feasible_bounded({1.0 / erfi(C), 0}, n);
  const double scaled = regret_of(built.curve) / std::sqrt(double(n));
  return std::fabs(scaled - C) <= 0.05 + 2.0 / std::sqrt(double(n));
}

// --- 6. head-to-head with multiplicative weights ---------------------------

bool adversarial_improvement() {
  const int n = 100;
  const double rho = 1.0 - 1.0 / n;
  const double C = optimal_regret_constant();
  const Strategy best = Strategy::hermite({1.0 / erfi(C), 0}, n);
  const Strategy wm = Strategy::weighted_majority(n);
  const double r_best = greedy_adversary(best, rho, 100000, 2).max_regret;
  const double r_wm = greedy_adversary(wm, rho, 100000, 2).max_regret;
  return r_best <= 0.95 * r_wm;
}

// --- 7. trade-off consistency ----------------------------------------------

bool tradeoff_consistency() {
  for (const TradeoffPoint& p : one_sided_curve(50)) {
    const OneSidedFeasibility fit = one_sided_feasible(p.r1, p.r2);
    if (!fit.feasible || std::fabs(fit.margin) > 1e-6) return false;
    if (one_sided_feasible(p.r1 - 0.02, p.r2).feasible) return false;
    if (one_sided_feasible(p.r1, p.r2 - 0.02).feasible) return false;
  }
  for (int i = 1; i <= 10; ++i) {
    const double L = 0.3 * i;
    const double R = symmetric_tradeoff(L);
    if (std::fabs(t_func(R / L) * kSqrtPi * L - 1.0) > 1e-9) return false;
  }
  return true;
}

// --- 8. discounted fixed-time game -----------------------------------------

void collect_heights(int depth, double rho, double h, std::vector<double>& out) {
  if (depth == 0) {
    out.push_back(h);
    return;
  }
  collect_heights(depth - 1, rho, rho * h + 1, out);
  collect_heights(depth - 1, rho, rho * h - 1, out);
}

bool discounted_fixed_time() {
  const int T = 10;
  const double rho = 0.9;
  std::vector<double> heights;
  heights.reserve(1u << T);
  collect_heights(T, rho, 0.0, heights);
  double mean_abs = 0.0;
  for (double h : heights) mean_abs += std::fabs(h);
  mean_abs /= heights.size();
  const DiscountedMinimax result = discounted_minimax(
      T, rho, [&](double h) { return std::fabs(h) - mean_abs; });
  if (std::fabs(result.root_value) > 1e-12) return false;

  const int T2 = 20;
  const double rho2 = 1.0 - 1.0 / 10;
  std::vector<double> all;
  all.reserve(1u << T2);
  collect_heights(T2, rho2, 0.0, all);
  double mean = 0.0;
  for (double h : all) mean += h;
  mean /= all.size();
  double var = 0.0;
  for (double h : all) var += (h - mean) * (h - mean);
  const double sd = std::sqrt(var / (all.size() - 1));
  const double target = std::sqrt(alpha(rho2, T2));
  return std::fabs(sd / target - 1.0) < 0.05;
}

// --- 9. equality rigidity ---------------------------------------------------

bool equality_rigidity() {
  const int n = 50;
  for (double c : {-0.7, 1.0, 2.5}) {
    const PayoffCurve f =
        tabulate_curve(n, 0.125, true, [c](double x) { return c * x; });
    for (int i = 0; i < 1000; ++i) {
      const double x = -31.0 + i * 0.0625;
      if (std::fabs(recursion_residual(f, x)) > 1e-12) return false;
    }
  }

  const int m = 100;
  const double sqrt_m = std::sqrt(double(m));
  const PayoffCurve g = tabulate_curve(m, 0.125, false, [&](double x) {
    const double y = x / sqrt_m;
    return std::fabs(y) <= 2.0 ? sqrt_m * hermite_payoff({1, 0}, y) : 0.0;
  });
  double max_res = 0.0;
  for (double x = -sqrt_m; x <= sqrt_m; x += 0.125) {
    max_res = std::max(max_res, recursion_residual(g, x));
  }
  return max_res > 1e-6;
}

// --- 10. multi-scale checker ------------------------------------------------

bool multiscale_checker() {
  const ScaleGrid zero = ScaleGrid::sample(
      1.0, 2.0, 2.0, 0.02, [](double, double) { return 0.0; },
      [](double, double) { return 0.0; });
  const ResidualFields fields = residual_fields(zero);
  for (std::size_t k = 0; k < fields.e1.size(); ++k) {
    if (std::fabs(fields.e1[k]) > 1e-9 || std::fabs(fields.e2[k]) > 1e-9 ||
        std::fabs(fields.slack[k]) > 1e-9) {
      return false;
    }
  }
  if (!check_pair(zero, 1e-9).feasible) return false;

  const ScaleGrid bad = ScaleGrid::sample(
      1.0, 2.0, 2.0, 0.02, [](double x1, double) { return x1; },
      [](double, double) { return 0.0; });
  const PairReport report = check_pair(bad, 1e-9);
  return !report.feasible && report.min_slack < -0.9;
}

int run(int index, const char* label, bool (*check)()) {
  const auto start = std::chrono::steady_clock::now();
  const bool ok = check();
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("%2d. %-42s %s  (%.2f s)\n", index, label, ok ? "PASS" : "FAIL",
              secs);
  return ok ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "fixed-horizon optimal regret", fixed_horizon_regret);
  failures += run(2, "terminal-payoff characterization", terminal_characterization);
  failures += run(3, "special-function machinery", hermite_machinery);
  failures += run(4, "steady-state feasibility", steady_state_feasibility);
  failures += run(5, "optimal regret constant", optimal_constant);
  failures += run(6, "improvement over multiplicative weights", adversarial_improvement);
  failures += run(7, "trade-off consistency", tradeoff_consistency);
  failures += run(8, "discounted fixed-time game", discounted_fixed_time);
  failures += run(9, "equality rigidity of linear curves", equality_rigidity);
  failures += run(10, "multi-scale residual checker", multiscale_checker);
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "regret/specfun.hpp"

namespace regret {

/// A payoff function tabulated on a uniform grid. The grid spans
/// [-x_max, x_max] with x_max <= n; for the standard curves x_max = n.
/// The unbounded-bet construction restricts x_max to sqrt(n ln n) to
/// keep exp(x^2/n) in double range.
struct PayoffCurve {
  int n = 0;                   // window size, rho = 1 - 1/n
  double grid_step = 0.125;    // must divide 1 as a dyadic rational
  double x_max = 0.0;          // half-width of the tabulated range
  std::vector<double> values;  // f at x = -x_max, -x_max+step, ..., x_max
  bool bounded_bets = true;

  double rho() const { return 1.0 - 1.0 / n; }
  std::size_t size() const { return values.size(); }
  double x_at(std::size_t i) const { return -x_max + i * grid_step; }

  /// f(x) by linear interpolation; throws std::domain_error outside
  /// [-x_max, x_max].
  double value_at(double x) const;

  bool in_range(double x) const { return x >= -x_max && x <= x_max; }
};

/// Builds a curve by sampling fn at every grid node of [-n, n].
template <class Fn>
PayoffCurve tabulate_curve(int n, double grid_step, bool bounded_bets, Fn&& fn) {
  PayoffCurve c;
  c.n = n;
  c.grid_step = grid_step;
  c.x_max = n;
  c.bounded_bets = bounded_bets;
  const auto count = static_cast<std::size_t>(2 * n / grid_step) + 1;
  c.values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) c.values.push_back(fn(c.x_at(i)));
  return c;
}

struct FeasibilityReport {
  bool feasible = false;
  double min_margin = 0.0;  // min over grid of f(x) - (f(rho x+1)+f(rho x-1))/(2 rho)
  double argmin_x = 0.0;
  bool origin_ok = false;     // f(0) <= 0
  bool lipschitz_ok = false;  // grid Lipschitz and |induced bet| <= 1 (bounded case)
};

/// f(x) - (f(rho x + 1) + f(rho x - 1)) / (2 rho), the slack in the
/// steady-state recursion inequality. Nonnegative iff the inequality
/// holds at x. Requires rho*x +- 1 inside the tabulated range.
double recursion_residual(const PayoffCurve& curve, double x);

/// Scans every grid node where rho*x +- 1 stays in range. Boundary
/// nodes are skipped; |discounted height| < n strictly, so nothing
/// reachable is lost.
FeasibilityReport check_feasible(const PayoffCurve& curve, double tolerance = 1e-9);

/// f(x) = sqrt(n) * Fhat(x / sqrt(n)) - K for the smallest shift
/// K in [0, 10] (bisection to 1e-6) that passes check_feasible with
/// tolerance 0 and has f(0) <= 0. Throws std::runtime_error if no
/// K <= 10 works.
struct BoundedConstruction {
  PayoffCurve curve;
  double shift = 0.0;  // K
};
BoundedConstruction make_feasible_bounded(const HermiteParams& p, int n,
                                          double grid_step = 0.125);

/// Damped curve f(x) = sqrt(n) s F(a x / sqrt(n)) with a = sqrt(1 - beta/n)
/// and s = exp(-beta/n)/a, which is F(x/sqrt(n)) exp(-beta(x^2/n^2 + 1/n))
/// up to lower-order terms. Picks the smallest damping beta in [0, 64]
/// (resolution 1e-3) passing check_feasible with unbounded bets. The grid
/// is restricted to |x| <= sqrt(n ln n).
struct UnboundedConstruction {
  PayoffCurve curve;
  double beta = 0.0;
};
UnboundedConstruction make_feasible_unbounded(const HermiteParams& p, int n,
                                              double grid_step = 0.125);

/// Central-difference estimate of g'' - 2xg' + 2g for a function
/// sampled on a symmetric uniform grid centred at 0. x must sit two
/// nodes from either end.
double differential_residual(const std::vector<double>& g_values,
                             double grid_step, double x);

/// Fits the Hermite solution through (g(0), g'(0)) and checks whether
/// it dominates g on the grid (Lemma: solutions of the differential
/// inequality are dominated by some F_{c1,c2}).
struct DominationResult {
  HermiteParams params;
  bool dominated = false;
  double max_violation = 0.0;  // max of g - F over the grid
};
DominationResult dominating_hermite(const std::vector<double>& g_values,
                                    double grid_step);

/// max over the grid of |x| - f(x).
double regret_of(const PayoffCurve& curve);
/// -min over the grid of f(x).
double loss_of(const PayoffCurve& curve);

/// Curve CSV: metadata line "# n=<int> grid_step=<rational> bounded=<0|1>"
/// (plus x_max when restricted), then header "x,f" and one row per node.
void write_curve_csv(std::ostream& out, const PayoffCurve& curve);
PayoffCurve read_curve_csv(std::istream& in);
void write_curve_file(const std::string& path, const PayoffCurve& curve);
PayoffCurve read_curve_file(const std::string& path);

}  // namespace regret

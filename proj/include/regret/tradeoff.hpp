#pragma once

#include <vector>

namespace regret {

/// A pair of regrets normalized by sqrt(n). Field meaning depends on
/// kind: two_sided carries (R, L), one_sided (R_o, L_o), experts
/// (R1, R2), max_avg (R_m, R_a).
struct TradeoffPoint {
  enum class Kind { TwoSided, OneSided, Experts, MaxAvg };
  double r1 = 0.0;
  double r2 = 0.0;
  Kind kind = Kind::Experts;
};

/// T(x) = erfi(sqrt(ln x)) for x >= 1; T(1) = 0, strictly increasing.
double t_func(double x);

/// Regret on the symmetric regret/loss trade-off curve: with x0
/// solving erfi(x0) = 1/(sqrt(pi) L), returns R = L * exp(x0^2), so
/// that T(R/L) = 1/(sqrt(pi) L). Throws when L is so small that
/// x0 would exceed 6.
double symmetric_tradeoff(double L);

/// Searches alpha > 0 for T(alpha r1) + T(alpha r2) >= alpha/sqrt(pi),
/// with T extended by zero below argument 1. Log grid over
/// [1e-3, 1e6] refined by golden section around the best point.
struct OneSidedFeasibility {
  bool feasible = false;
  double alpha_star = 0.0;
  double margin = 0.0;  // max over alpha of T(a r1)+T(a r2)-a/sqrt(pi)
};
OneSidedFeasibility one_sided_feasible(double r1, double r2);

/// Boundary of the achievable (R1, R2) region for two experts,
/// parametrized by the capped Hermite family: for each c2 in (0, 1)
/// the curve point minimizes R_o at fixed L_o over c1. Returned as
/// experts-kind points (r1 = L_o, r2 = R_o), r2 decreasing in r1.
std::vector<TradeoffPoint> one_sided_curve(int points);

/// Reductions between the prediction game and the experts problem:
/// two_sided(R, L) <-> max_avg(R/2, L/2) and
/// one_sided(R_o, L_o) <-> experts(R1 = L_o, R2 = R_o).
/// Applying twice is the identity.
TradeoffPoint experts_reductions(const TradeoffPoint& p);

/// C = min_{alpha >= 1} alpha / (sqrt(pi) * erfi(sqrt(ln alpha))),
/// the optimal steady-state regret constant. Equals the positive root
/// of F_{1,0}.
double optimal_regret_constant();

}  // namespace regret

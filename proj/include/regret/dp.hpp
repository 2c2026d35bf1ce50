#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <vector>

namespace regret {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Terminal payoff on the reachable heights {-T, -T+2, ..., T}.
using Terminal = std::function<Rational(long height)>;

/// Backward-induction table for the fixed-horizon game. Heights at
/// time t are {-t, -t+2, ..., t}; s(t, x) is the minimal necessary
/// payoff and bet(t, x) the optimal bet that protects it.
class DPTable {
 public:
  int horizon() const { return T_; }
  const Rational& s(int t, long height) const;
  const Rational& bet(int t, long height) const;  // bet placed at time t, state height

 private:
  friend DPTable minimax_table(int T, const Terminal& terminal);
  int T_ = 0;
  // layer t holds t+1 states, ordered by height -t, -t+2, ..., t
  std::vector<std::vector<Rational>> s_;
  std::vector<std::vector<Rational>> bets_;  // bets_[t] computed from layer t+1
};

/// Exact backward recursion
///   s_t(x) = (s_{t+1}(x+1) + s_{t+1}(x-1)) / 2,
///   bet_t(x) = (s_{t+1}(x+1) - s_{t+1}(x-1)) / 2.
/// Requires 1 <= T <= 30.
DPTable minimax_table(int T, const Terminal& terminal);

/// Cover's characterization: the terminal payoff f is feasible iff
/// sum_x C(T,x) f(T-2x) = 0 exactly and f is 1-Lipschitz across
/// consecutive reachable heights. Requires T <= 60.
struct CoverResult {
  bool sum_zero = false;
  bool lipschitz = false;
};
CoverResult cover_feasibility(const Terminal& terminal, int T);

/// E |S_T| for S_T a sum of T independent +-1 signs; exact rational
/// sum_x C(T,x) |T-2x| / 2^T. Requires T <= 60.
Rational expected_abs_height(int T);

/// Effective variance of the discounted height, (1 - rho^(2T)) / (1 - rho^2).
double alpha(double rho, int T);

/// Exact backward induction over the full binary history tree for the
/// discounted fixed-time game (discounted heights are sequence
/// dependent, so states do not merge). Requires T <= 22.
struct DiscountedMinimax {
  double root_value = 0.0;
  double max_abs_bet = 0.0;
};
DiscountedMinimax discounted_minimax(int T, double rho,
                                     const std::function<double(double)>& terminal);

}  // namespace regret

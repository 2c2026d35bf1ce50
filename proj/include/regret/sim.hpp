#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "regret/curves.hpp"
#include "regret/strategies.hpp"

namespace regret {

/// One step of a played game. The bet is computed from the height
/// BEFORE the bit is revealed; then h <- rho h + bit and
/// a <- rho a + bit * bet.
struct TraceStep {
  long t = 0;
  int bit = 0;
  double bet = 0.0;
  double h = 0.0;      // discounted height after the step
  double a = 0.0;      // discounted payoff after the step
  double a_raw = 0.0;  // undiscounted running payoff
  double regret = 0.0; // running max over time of |h| - a
};

struct GameTrace {
  double rho = 0.0;
  std::uint64_t seed = 0;  // 0 when the bit sequence was not random
  std::vector<TraceStep> steps;

  double max_regret() const { return steps.empty() ? 0.0 : steps.back().regret; }
};

/// Plays the strategy against a fixed bit sequence.
GameTrace run(const Strategy& s, const std::vector<int>& bits, double rho);

/// Exact worst case over all 2^T sequences of the final-step
/// |h_T| - a_T, with one maximizing sequence. Requires T <= 22.
struct WorstCase {
  double regret = 0.0;
  std::vector<int> witness;
};
WorstCase exhaustive_worst_regret(const Strategy& s, double rho, int T);

/// Adversarial probe for long horizons: each step plays the bit that
/// maximizes |h| - a after `lookahead` further optimally adversarial
/// steps (full 2^lookahead expansion). Tracks the running maximum of
/// |h| - a over the whole horizon.
struct AdversaryResult {
  double max_regret = 0.0;
  GameTrace trace;
};
AdversaryResult greedy_adversary(const Strategy& s, double rho, long horizon,
                                 int lookahead);

/// Lower envelope of the (h, a) pairs visited across one greedy
/// adversary run and `probes` seeded random runs, bucketed on the
/// curve grid. Buckets never visited are marked absent.
struct EnvelopeCurve {
  int n = 0;
  double grid_step = 0.125;
  std::vector<double> values;
  std::vector<bool> present;

  double x_at(std::size_t i) const { return -n + i * grid_step; }
};
EnvelopeCurve empirical_payoff_curve(const Strategy& s, double rho, long horizon,
                                     int probes, double grid_step = 0.125,
                                     std::uint64_t seed = 1);

/// Trace CSV: "t,bit,bet,h,a,a_raw,regret".
void write_trace_csv(std::ostream& out, const GameTrace& trace);

}  // namespace regret

#include "regret/sim.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

namespace regret {

namespace {

struct State {
  double h = 0.0;
  double a = 0.0;

  void step(double rho, int bit, double bet) {
    h = rho * h + bit;
    a = rho * a + bit * bet;
  }
};

// Worst |h| - a reachable from `state` in `depth` adversarial steps.
double adversary_value(const Strategy& s, double rho, State state, int depth) {
  if (depth == 0) return std::fabs(state.h) - state.a;
  const double bet = s.bet(state.h);
  State up = state, down = state;
  up.step(rho, +1, bet);
  down.step(rho, -1, bet);
  return std::max(adversary_value(s, rho, up, depth - 1),
                  adversary_value(s, rho, down, depth - 1));
}

}  // namespace

GameTrace run(const Strategy& s, const std::vector<int>& bits, double rho) {
  GameTrace trace;
  trace.rho = rho;
  trace.steps.reserve(bits.size());
  State state;
  double a_raw = 0.0;
  double worst = -std::numeric_limits<double>::infinity();
  long t = 0;
  for (int bit : bits) {
    if (bit != 1 && bit != -1) throw std::invalid_argument("run: bits must be +-1");
    const double bet = s.bet(state.h);
    state.step(rho, bit, bet);
    a_raw += bit * bet;
    worst = std::max(worst, std::fabs(state.h) - state.a);
    trace.steps.push_back({++t, bit, bet, state.h, state.a, a_raw, worst});
  }
  return trace;
}

namespace {

void worst_regret_search(const Strategy& s, double rho, State state, int depth,
                         std::vector<int>& path, WorstCase& best) {
  if (depth == 0) {
    const double regret = std::fabs(state.h) - state.a;
    if (regret > best.regret) {
      best.regret = regret;
      best.witness = path;
    }
    return;
  }
  const double bet = s.bet(state.h);
  for (int bit : {+1, -1}) {
    State next = state;
    next.step(rho, bit, bet);
    path.push_back(bit);
    worst_regret_search(s, rho, next, depth - 1, path, best);
    path.pop_back();
  }
}

}  // namespace

WorstCase exhaustive_worst_regret(const Strategy& s, double rho, int T) {
  if (T < 1) throw std::domain_error("exhaustive_worst_regret: T must be >= 1");
  if (T > 22) {
    throw std::length_error("exhaustive_worst_regret: T > 22 exceeds the 2^T budget");
  }
  WorstCase best;
  best.regret = -std::numeric_limits<double>::infinity();
  std::vector<int> path;
  path.reserve(T);
  worst_regret_search(s, rho, State{}, T, path, best);
  return best;
}

AdversaryResult greedy_adversary(const Strategy& s, double rho, long horizon,
                                 int lookahead) {
  if (lookahead < 1 || lookahead > 3) {
    throw std::domain_error("greedy_adversary: lookahead must be 1, 2 or 3");
  }
  if (horizon < 1 || horizon > 1000000L) {
    throw std::domain_error("greedy_adversary: horizon must be in [1, 1e6]");
  }
  AdversaryResult result;
  result.trace.rho = rho;
  result.trace.steps.reserve(horizon);
  State state;
  double a_raw = 0.0;
  double worst = -std::numeric_limits<double>::infinity();

  // Against any strategy whose bet stays strictly inside (-1, 1), the pure
  // lookahead rule raises |h| at every step: at the expansion leaves the
  // upward branch beats the downward one by 2(1 - bet).  The transient climb
  // alone underestimates the steady-state worst case, which is reached by
  // first letting the payoff bleed while h oscillates around a fixed level
  // and only then climbing.  Whenever the running maximum stops improving,
  // the adversary therefore pins h to the next level from a sweep of the
  // lower half of the window, holds it there until the oscillation reaches
  // its steady state, and hands control back to the lookahead rule, which
  // then performs the climb from the drained position.
  const double n = 1.0 / (1.0 - rho);
  const bool can_drain = rho < 1.0 && n < 1e6;
  const long stall_window = can_drain ? std::lround(5 * n) : horizon + 1;
  const long drain_length = can_drain ? std::lround(6 * n) : 0;
  const double level_step = can_drain ? n / 100.0 : 0.0;
  int level_index = 0;
  long last_improvement = 0;
  long drain_until = 0;
  double drain_level = 0.0;

  for (long t = 1; t <= horizon; ++t) {
    const double bet = s.bet(state.h);
    int bit;
    if (t <= drain_until) {
      bit = state.h < drain_level ? +1 : -1;
    } else {
      State up = state, down = state;
      up.step(rho, +1, bet);
      down.step(rho, -1, bet);
      const double v_up = adversary_value(s, rho, up, lookahead - 1);
      const double v_down = adversary_value(s, rho, down, lookahead - 1);
      bit = v_up >= v_down ? +1 : -1;
    }
    state.step(rho, bit, bet);
    a_raw += bit * bet;
    if (std::fabs(state.h) - state.a > worst) {
      worst = std::fabs(state.h) - state.a;
      last_improvement = t;
    }
    result.trace.steps.push_back({t, bit, bet, state.h, state.a, a_raw, worst});
    if (t > drain_until && t - last_improvement >= stall_window) {
      drain_level = level_step * (level_index % 50);
      ++level_index;
      drain_until = t + drain_length;
      last_improvement = t + drain_length;
    }
  }
  result.max_regret = worst;
  return result;
}

EnvelopeCurve empirical_payoff_curve(const Strategy& s, double rho, long horizon,
                                     int probes, double grid_step,
                                     std::uint64_t seed) {
  if (probes < 1) throw std::invalid_argument("empirical_payoff_curve: probes >= 1");
  const int n = static_cast<int>(std::lround(1.0 / (1.0 - rho)));
  EnvelopeCurve env;
  env.n = n;
  env.grid_step = grid_step;
  const auto buckets = static_cast<std::size_t>(std::llround(2 * n / grid_step)) + 1;
  env.values.assign(buckets, std::numeric_limits<double>::infinity());
  env.present.assign(buckets, false);

  auto absorb = [&](const GameTrace& trace) {
    for (const TraceStep& step : trace.steps) {
      const auto i = static_cast<std::size_t>(std::llround((step.h + n) / grid_step));
      if (i >= buckets) continue;
      if (step.a < env.values[i]) env.values[i] = step.a;
      env.present[i] = true;
    }
  };

  absorb(greedy_adversary(s, rho, horizon, 2).trace);

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (int p = 0; p < probes; ++p) {
    std::vector<int> bits(horizon);
    for (auto& b : bits) b = coin(rng) ? +1 : -1;
    GameTrace trace = run(s, bits, rho);
    trace.seed = seed;
    absorb(trace);
  }
  for (std::size_t i = 0; i < buckets; ++i) {
    if (!env.present[i]) env.values[i] = 0.0;
  }
  return env;
}

void write_trace_csv(std::ostream& out, const GameTrace& trace) {
  out << "t,bit,bet,h,a,a_raw,regret\n";
  out.precision(17);
  for (const TraceStep& s : trace.steps) {
    out << s.t << ',' << s.bit << ',' << s.bet << ',' << s.h << ',' << s.a << ','
        << s.a_raw << ',' << s.regret << '\n';
  }
}

}  // namespace regret

// Command-line surface for the regret library: emits figure-reproduction
// data as CSV (or JSON via --format json) and runs feasibility checks.
//
// Subcommands: curve, betting, simulate, dp, tradeoff, multiscale, verify.
// Exit codes: 0 ok, 1 verification failed, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "regret/curves.hpp"
#include "regret/dp.hpp"
#include "regret/multiscale.hpp"
#include "regret/sim.hpp"
#include "regret/specfun.hpp"
#include "regret/strategies.hpp"
#include "regret/tradeoff.hpp"

namespace {

constexpr const char* kVersion = "regret-cli 1.0";

struct RunConfig {
  int n = 100;
  double grid_step = 0.125;
  std::string strategy = "hermite:c1=0.6972855884034919,c2=0";
  long horizon = 100000;
  int lookahead = 2;
  std::uint64_t seed = 12345;
  int points = 50;
  std::string format = "csv";
  std::string out;
  std::string input;  // verify / multiscale input file
  double a1 = 1.0;    // multiscale scale factors
  double a2 = 2.0;
};

// A small row-oriented table so every command can serialize to CSV or
// JSON through one code path. The metadata line records version,
// command and config so outputs are reproducible byte for byte.
struct Table {
  std::string meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_table(std::ostream& out, const Table& table, const std::string& format) {
  if (format == "json") {
    nlohmann::json doc;
    doc["meta"] = table.meta;
    doc["columns"] = table.columns;
    auto& rows = doc["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows) rows.push_back(row);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# " << table.meta << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << '\n';
  }
}

void emit(const RunConfig& config, const Table& table) {
  if (config.out.empty()) {
    write_table(std::cout, table, config.format);
    return;
  }
  std::ofstream out(config.out);
  if (!out) throw std::runtime_error("cannot open output file: " + config.out);
  write_table(out, table, config.format);
}

std::string meta_line(const RunConfig& config, const std::string& command) {
  std::ostringstream meta;
  meta << kVersion << " cmd=" << command << " n=" << config.n
       << " grid-step=" << config.grid_step << " strategy=" << config.strategy
       << " horizon=" << config.horizon << " lookahead=" << config.lookahead
       << " seed=" << config.seed << " points=" << config.points;
  return meta.str();
}

// Pulls (c1, c2) out of a hermite strategy spec. cmd_curve needs the
// parameters themselves, not just the betting rule, to run the curve
// construction.
bool parse_hermite_spec(const std::string& spec, regret::HermiteParams& params) {
  if (spec.rfind("hermite:", 0) != 0) return false;
  return std::sscanf(spec.c_str() + 8, "c1=%lf,c2=%lf", &params.c1, &params.c2) == 2;
}

// curve: sqrt(n)-scaled payoff relative to the best expert,
// (f(x) - |x|)/sqrt(n). Hermite strategies use the constructed
// feasible curve; everything else the empirical lower envelope.
int cmd_curve(const RunConfig& config) {
  Table table;
  table.meta = meta_line(config, "curve");
  table.columns = {"x_scaled", "f_scaled", "strategy"};
  const regret::Strategy s = regret::Strategy::parse(config.strategy, config.n);
  const double sqrt_n = std::sqrt(static_cast<double>(config.n));

  regret::HermiteParams params;
  if (parse_hermite_spec(config.strategy, params)) {
    const regret::BoundedConstruction built =
        regret::make_feasible_bounded(params, config.n, config.grid_step);
    for (std::size_t i = 0; i < built.curve.size(); ++i) {
      const double x = built.curve.x_at(i);
      table.add_row({fmt(x / sqrt_n),
                     fmt((built.curve.values[i] - std::fabs(x)) / sqrt_n),
                     s.name()});
    }
  } else {
    const regret::EnvelopeCurve env = regret::empirical_payoff_curve(
        s, 1.0 - 1.0 / config.n, config.horizon, 5, config.grid_step, config.seed);
    for (std::size_t i = 0; i < env.values.size(); ++i) {
      if (!env.present[i]) continue;
      const double x = env.x_at(i);
      table.add_row(
          {fmt(x / sqrt_n), fmt((env.values[i] - std::fabs(x)) / sqrt_n), s.name()});
    }
  }
  emit(config, table);
  return 0;
}

// betting: the capped Hermite rule against tanh, on the scaled axis.
int cmd_betting(const RunConfig& config) {
  Table table;
  table.meta = meta_line(config, "betting");
  table.columns = {"x_scaled", "bet", "strategy"};
  const regret::Strategy hermite =
      regret::Strategy::parse(config.strategy, config.n);
  const regret::Strategy wm = regret::Strategy::weighted_majority(config.n);
  const double sqrt_n = std::sqrt(static_cast<double>(config.n));
  const int count = std::max(config.points, 2);
  for (const regret::Strategy* s : {&hermite, &wm}) {
    for (int i = 0; i < count; ++i) {
      const double y = -3.0 + 6.0 * i / (count - 1);
      table.add_row({fmt(y), fmt(s->bet(y * sqrt_n)), s->name()});
    }
  }
  emit(config, table);
  return 0;
}

// simulate: greedy-adversary trace for one strategy.
int cmd_simulate(const RunConfig& config) {
  Table table;
  table.meta = meta_line(config, "simulate");
  table.columns = {"t", "bit", "bet", "h", "a", "a_raw", "regret"};
  const regret::Strategy s = regret::Strategy::parse(config.strategy, config.n);
  const regret::AdversaryResult result = regret::greedy_adversary(
      s, 1.0 - 1.0 / config.n, config.horizon, config.lookahead);
  for (const regret::TraceStep& step : result.trace.steps) {
    table.add_row({std::to_string(step.t), std::to_string(step.bit), fmt(step.bet),
                   fmt(step.h), fmt(step.a), fmt(step.a_raw), fmt(step.regret)});
  }
  std::cerr << "max regret " << fmt(result.max_regret) << " ("
            << fmt(result.max_regret / std::sqrt(static_cast<double>(config.n)))
            << " x sqrt(n))\n";
  emit(config, table);
  return 0;
}

// dp: exact minimax table for the fixed-horizon game with terminal
// |x| - E|S_T|, flattened as t,x,s,bet rows.
int cmd_dp(const RunConfig& config) {
  const int T = static_cast<int>(config.horizon);
  if (T < 1 || T > 22) {
    throw CLI::ValidationError("dp", "--horizon must be in [1, 22] for the exact DP");
  }
  Table table;
  table.meta = meta_line(config, "dp");
  table.columns = {"t", "x", "s", "bet"};
  const regret::Rational mean = regret::expected_abs_height(T);
  const regret::DPTable dp = regret::minimax_table(
      T, [&](long height) { return regret::Rational(std::labs(height)) - mean; });
  for (int t = 0; t <= T; ++t) {
    for (long x = -t; x <= t; x += 2) {
      std::vector<std::string> row = {std::to_string(t), std::to_string(x),
                                      fmt(dp.s(t, x).convert_to<double>()), ""};
      if (t < T) row.back() = fmt(dp.bet(t, x).convert_to<double>());
      table.add_row(std::move(row));
    }
  }
  emit(config, table);
  return 0;
}

// tradeoff: boundary of the achievable one-sided regret region.
int cmd_tradeoff(const RunConfig& config) {
  Table table;
  table.meta = meta_line(config, "tradeoff");
  table.columns = {"r1", "r2"};
  for (const regret::TradeoffPoint& p : regret::one_sided_curve(config.points)) {
    table.add_row({fmt(p.r1), fmt(p.r2)});
  }
  emit(config, table);
  return 0;
}

// multiscale: reads "x1,x2,g1,g2" fields and reports the residual
// check as JSON. Exit 1 when the pair is rejected.
int cmd_multiscale(const RunConfig& config) {
  std::ifstream in(config.input);
  if (!in) throw CLI::ValidationError("multiscale", "cannot open " + config.input);
  const regret::ScaleGrid grid =
      regret::read_fields_csv(in, config.a1, config.a2);
  const regret::PairReport report = regret::check_pair(grid, 1e-9);
  if (config.out.empty()) {
    regret::write_report_json(std::cout, report);
  } else {
    std::ofstream out(config.out);
    if (!out) throw std::runtime_error("cannot open output file: " + config.out);
    regret::write_report_json(out, report);
  }
  return report.feasible ? 0 : 1;
}

// verify: feasibility check of a stored payoff curve. Exit 1 on failure.
int cmd_verify(const RunConfig& config) {
  const regret::PayoffCurve curve = regret::read_curve_file(config.input);
  const regret::FeasibilityReport report = regret::check_feasible(curve);
  std::cout << (report.feasible ? "feasible" : "infeasible")
            << " min_margin=" << fmt(report.min_margin)
            << " origin_ok=" << report.origin_ok
            << " lipschitz_ok=" << report.lipschitz_ok << '\n';
  return report.feasible ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Optimal-regret strategies for binary sequence prediction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", config.n, "Window size (rho = 1 - 1/n)")
        ->check(CLI::Range(2, 1000000));
    cmd->add_option("--grid-step", config.grid_step, "Curve grid step")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", config.seed, "RNG seed for probe runs");
    cmd->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", config.out, "Output path (default stdout)");
  };

  CLI::App* curve = app.add_subcommand("curve", "Scaled payoff curves (Figure 1b)");
  add_common(curve);
  curve->add_option("--strategy", config.strategy, "Strategy spec");
  curve->add_option("--horizon", config.horizon, "Envelope simulation length");

  CLI::App* betting = app.add_subcommand("betting", "Betting rules (Figure 1a)");
  add_common(betting);
  betting->add_option("--strategy", config.strategy, "Hermite strategy spec");
  betting->add_option("--points", config.points, "Rows per strategy")
      ->check(CLI::Range(2, 100000));

  CLI::App* simulate = app.add_subcommand("simulate", "Greedy-adversary trace");
  add_common(simulate);
  simulate->add_option("--strategy", config.strategy, "Strategy spec");
  simulate->add_option("--horizon", config.horizon, "Number of steps")
      ->check(CLI::Range(1L, 1000000L));
  simulate->add_option("--lookahead", config.lookahead, "Adversary lookahead")
      ->check(CLI::Range(1, 3));

  CLI::App* dp = app.add_subcommand("dp", "Exact fixed-horizon minimax table");
  add_common(dp);
  dp->add_option("--horizon", config.horizon, "Horizon T (<= 22)");

  CLI::App* tradeoff =
      app.add_subcommand("tradeoff", "One-sided regret trade-off boundary");
  add_common(tradeoff);
  tradeoff->add_option("--points", config.points, "Boundary points")
      ->check(CLI::Range(1, 10000));

  CLI::App* multiscale =
      app.add_subcommand("multiscale", "Residual check of a two-scale field pair");
  add_common(multiscale);
  multiscale->add_option("fields", config.input, "CSV of x1,x2,g1,g2")->required();
  multiscale->add_option("--a1", config.a1, "First scale factor");
  multiscale->add_option("--a2", config.a2, "Second scale factor");

  CLI::App* verify = app.add_subcommand("verify", "Feasibility check of a curve file");
  add_common(verify);
  verify->add_option("curve", config.input, "Stored payoff curve")->required();

  try {
    app.parse(argc, argv);
    if (curve->parsed()) return cmd_curve(config);
    if (betting->parsed()) return cmd_betting(config);
    if (simulate->parsed()) return cmd_simulate(config);
    if (dp->parsed()) return cmd_dp(config);
    if (tradeoff->parsed()) return cmd_tradeoff(config);
    if (multiscale->parsed()) return cmd_multiscale(config);
    if (verify->parsed()) return cmd_verify(config);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

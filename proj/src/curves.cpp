#include "regret/curves.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace regret {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

void require_dyadic_step(double step) {
  if (!(step > 0) || step > 1) {
    throw std::invalid_argument("grid_step must be in (0, 1]");
  }
  const double inv = 1.0 / step;
  const double q = std::round(inv);
  if (std::fabs(inv - q) > 1e-9 * inv ||
      (static_cast<long>(q) & (static_cast<long>(q) - 1)) != 0) {
    throw std::invalid_argument("grid_step must divide 1 as a dyadic rational");
  }
}

// Roundoff allowance for the tolerance-0 construction scans: linear
// curves satisfy the recursion with equality, which double arithmetic
// reproduces only to ~|f|*eps.
double roundoff_tol(const PayoffCurve& c) {
  double m = 1.0;
  for (double v : c.values) m = std::max(m, std::fabs(v));
  return 1e-11 * m;
}

}  // namespace

double PayoffCurve::value_at(double x) const {
  if (!in_range(x)) {
    throw std::domain_error("PayoffCurve::value_at: x outside tabulated range");
  }
  const double pos = (x + x_max) / grid_step;
  auto i = static_cast<std::size_t>(pos);
  if (i + 1 >= values.size()) return values.back();
  const double frac = pos - i;
  return values[i] + frac * (values[i + 1] - values[i]);
}

double recursion_residual(const PayoffCurve& curve, double x) {
  const double rho = curve.rho();
  if (!curve.in_range(x) || !curve.in_range(rho * x + 1) ||
      !curve.in_range(rho * x - 1)) {
    throw std::domain_error("recursion_residual: rho*x +- 1 out of range");
  }
  return curve.value_at(x) -
         (curve.value_at(rho * x + 1) + curve.value_at(rho * x - 1)) / (2 * rho);
}

FeasibilityReport check_feasible(const PayoffCurve& curve, double tolerance) {
  if (tolerance < 0) throw std::invalid_argument("tolerance must be >= 0");
  const double rho = curve.rho();
  FeasibilityReport report;
  report.min_margin = std::numeric_limits<double>::infinity();
  report.origin_ok = curve.value_at(0.0) <= tolerance;
  report.lipschitz_ok = true;

  bool bets_ok = true;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double x = curve.x_at(i);
    if (!curve.in_range(rho * x + 1) || !curve.in_range(rho * x - 1)) continue;
    const double up = curve.value_at(rho * x + 1);
    const double down = curve.value_at(rho * x - 1);
    const double margin = curve.values[i] - (up + down) / (2 * rho);
    if (margin < report.min_margin) {
      report.min_margin = margin;
      report.argmin_x = x;
    }
    if (curve.bounded_bets && std::fabs((up - down) / 2) > 1 + tolerance) {
      bets_ok = false;
    }
  }
  if (curve.bounded_bets) {
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
      if (std::fabs(curve.values[i + 1] - curve.values[i]) >
          curve.grid_step + tolerance) {
        report.lipschitz_ok = false;
        break;
      }
    }
    report.lipschitz_ok = report.lipschitz_ok && bets_ok;
  }
  report.feasible = report.min_margin >= -tolerance && report.origin_ok &&
                    report.lipschitz_ok;
  return report;
}

BoundedConstruction make_feasible_bounded(const HermiteParams& p, int n,
                                          double grid_step) {
  if (n < 4) throw std::invalid_argument("make_feasible_bounded: n >= 4 required");
  require_dyadic_step(grid_step);
  const CappedHermite fhat(p);
  const double sqrt_n = std::sqrt(static_cast<double>(n));

  auto build = [&](double shift) {
    return tabulate_curve(n, grid_step, /*bounded_bets=*/true, [&](double x) {
      return sqrt_n * fhat(x / sqrt_n).value - shift;
    });
  };
  auto feasible = [&](double shift) {
    const PayoffCurve c = build(shift);
    return check_feasible(c, roundoff_tol(c)).feasible;
  };

  double shift = 0.0;
  if (!feasible(0.0)) {
    double lo = 0.0, hi = 10.0;
    if (!feasible(hi)) {
      throw std::runtime_error(
          "make_feasible_bounded: no shift K <= 10 yields a feasible curve");
    }
    while (hi - lo > 1e-6) {
      const double mid = 0.5 * (lo + hi);
      (feasible(mid) ? hi : lo) = mid;
    }
    shift = hi;
  }
  return {build(shift), shift};
}

UnboundedConstruction make_feasible_unbounded(const HermiteParams& p, int n,
                                              double grid_step) {
  if (!(p.c1 >= 0)) {
    throw std::domain_error("make_feasible_unbounded: c1 must be >= 0");
  }
  require_dyadic_step(grid_step);
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double x_lim = sqrt_n * std::sqrt(std::log(static_cast<double>(n)));
  const double x_max = std::floor(x_lim / grid_step) * grid_step;

  auto build = [&](double beta) {
    PayoffCurve c;
    c.n = n;
    c.grid_step = grid_step;
    c.x_max = x_max;
    c.bounded_bets = false;
    const double a = std::sqrt(1.0 - beta / n);
    const double s = std::exp(-beta / n) / a;
    const auto count = static_cast<std::size_t>(std::llround(2 * x_max / grid_step)) + 1;
    c.values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double x = c.x_at(i);
      c.values.push_back(sqrt_n * s * hermite_payoff(p, a * x / sqrt_n));
    }
    return c;
  };
  auto feasible = [&](double beta) {
    const PayoffCurve c = build(beta);
    return check_feasible(c, roundoff_tol(c)).feasible;
  };

  if (feasible(0.0)) return {build(0.0), 0.0};
  double lo = 0.0, hi = -1.0;
  for (double b = 1.0; b <= 64.0; b += 1.0) {
    if (feasible(b)) {
      hi = b;
      break;
    }
    lo = b;
  }
  if (hi < 0) {
    throw std::runtime_error(
        "make_feasible_unbounded: no damping beta <= 64 yields a feasible curve");
  }
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return {build(hi), hi};
}

double differential_residual(const std::vector<double>& g_values,
                             double grid_step, double x) {
  const std::size_t len = g_values.size();
  if (len < 3) throw std::invalid_argument("differential_residual: grid too small");
  const double mid = (len - 1) / 2.0;
  const double pos = mid + x / grid_step;
  const auto i = static_cast<std::size_t>(std::llround(pos));
  if (std::llround(pos) < 1 || i + 1 >= len) {
    throw std::domain_error("differential_residual: x too close to the boundary");
  }
  const double h = grid_step;
  const double g2 = (g_values[i + 1] - 2 * g_values[i] + g_values[i - 1]) / (h * h);
  const double g1 = (g_values[i + 1] - g_values[i - 1]) / (2 * h);
  return g2 - 2 * x * g1 + 2 * g_values[i];
}

DominationResult dominating_hermite(const std::vector<double>& g_values,
                                    double grid_step) {
  const std::size_t len = g_values.size();
  if (len < 3 || len % 2 == 0) {
    throw std::invalid_argument(
        "dominating_hermite: grid must be symmetric with a node at 0");
  }
  const std::size_t mid = (len - 1) / 2;
  DominationResult result;
  result.params.c1 = -kSqrtPi * g_values[mid];
  result.params.c2 = (g_values[mid + 1] - g_values[mid - 1]) / (2 * grid_step);
  result.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < len; ++i) {
    const double x = (static_cast<double>(i) - mid) * grid_step;
    if (std::fabs(x) > 8.0) continue;
    result.max_violation =
        std::max(result.max_violation, g_values[i] - hermite_payoff(result.params, x));
  }
  result.dominated = result.max_violation <= 1e-6;
  return result;
}

double regret_of(const PayoffCurve& curve) {
  double r = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < curve.size(); ++i) {
    r = std::max(r, std::fabs(curve.x_at(i)) - curve.values[i]);
  }
  return r;
}

double loss_of(const PayoffCurve& curve) {
  double m = std::numeric_limits<double>::infinity();
  for (double v : curve.values) m = std::min(m, v);
  return -m;
}

namespace {

std::string format_step(double step) {
  const double inv = 1.0 / step;
  const double q = std::round(inv);
  if (std::fabs(inv - q) < 1e-9) {
    if (q == 1) return "1";
    std::ostringstream os;
    os << "1/" << static_cast<long>(q);
    return os.str();
  }
  std::ostringstream os;
  os.precision(17);
  os << step;
  return os.str();
}

double parse_step(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return std::stod(text);
  return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
}

}  // namespace

void write_curve_csv(std::ostream& out, const PayoffCurve& curve) {
  out << "# n=" << curve.n << " grid_step=" << format_step(curve.grid_step)
      << " bounded=" << (curve.bounded_bets ? 1 : 0);
  if (curve.x_max != curve.n) out << " x_max=" << curve.x_max;
  out << "\nx,f\n";
  out.precision(17);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out << curve.x_at(i) << ',' << curve.values[i] << '\n';
  }
}

PayoffCurve read_curve_csv(std::istream& in) {
  PayoffCurve curve;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) {
    throw std::runtime_error("curve CSV: missing metadata line");
  }
  curve.x_max = -1;
  std::istringstream meta(line.substr(2));
  std::string token;
  while (meta >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq);
    const std::string val = token.substr(eq + 1);
    if (key == "n") curve.n = std::stoi(val);
    else if (key == "grid_step") curve.grid_step = parse_step(val);
    else if (key == "bounded") curve.bounded_bets = val != "0";
    else if (key == "x_max") curve.x_max = std::stod(val);
  }
  if (curve.n <= 0) throw std::runtime_error("curve CSV: bad or missing n");
  if (curve.x_max < 0) curve.x_max = curve.n;
  if (!std::getline(in, line) || line != "x,f") {
    throw std::runtime_error("curve CSV: missing x,f header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("curve CSV: malformed row: " + line);
    }
    curve.values.push_back(std::stod(line.substr(comma + 1)));
  }
  const auto expected =
      static_cast<std::size_t>(std::llround(2 * curve.x_max / curve.grid_step)) + 1;
  if (curve.values.size() != expected) {
    throw std::runtime_error("curve CSV: row count does not match grid");
  }
  return curve;
}

void write_curve_file(const std::string& path, const PayoffCurve& curve) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_curve_csv(out, curve);
}

PayoffCurve read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_curve_csv(in);
}

}  // namespace regret

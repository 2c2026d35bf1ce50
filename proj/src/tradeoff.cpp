#include "regret/tradeoff.hpp"

#include <cmath>
#include <stdexcept>

#include "regret/specfun.hpp"

namespace regret {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kGolden = 0.6180339887498949;

template <class Fn>
double golden_min(Fn&& f, double a, double b, double tol) {
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// F_{1,0}(x)/x, strictly increasing on (0, inf); its single zero x*
// is the optimal regret constant.
double phi(double x) { return erfi(x) - std::exp(x * x) / (kSqrtPi * x); }

// Solves phi(v) = -phi(w): pairs each cap point with its partner on
// the other side of x*.
double envelope_partner(double w, double x_star) {
  const double target = -phi(w);
  double lo, hi;
  if (w >= x_star) {
    lo = 1e-12;
    hi = x_star;
  } else {
    lo = x_star;
    hi = 6.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (phi(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double t_func(double x) {
  if (!(x >= 1.0)) throw std::domain_error("t_func: x must be >= 1");
  return erfi(std::sqrt(std::log(x)));
}

double symmetric_tradeoff(double L) {
  if (!(L > 0)) throw std::domain_error("symmetric_tradeoff: L must be > 0");
  const double target = 1.0 / (kSqrtPi * L);
  if (target > erfi(6.0)) {
    throw std::domain_error("symmetric_tradeoff: L too small (x0 would exceed 6)");
  }
  const double x0 = erfi_inverse(target);
  return L * std::exp(x0 * x0);
}

OneSidedFeasibility one_sided_feasible(double r1, double r2) {
  if (!(r1 > 0) || !(r2 > 0)) {
    throw std::domain_error("one_sided_feasible: regrets must be > 0");
  }
  auto t_or_zero = [](double y) { return y < 1.0 ? 0.0 : t_func(y); };
  auto neg_margin = [&](double log_a) {
    const double a = std::exp(log_a);
    return -(t_or_zero(a * r1) + t_or_zero(a * r2) - a / kSqrtPi);
  };

  const double lo = std::log(1e-3), hi = std::log(1e6);
  const int grid = 2000;
  double best_log_a = lo;
  double best = neg_margin(lo);
  for (int i = 1; i <= grid; ++i) {
    const double la = lo + (hi - lo) * i / grid;
    const double v = neg_margin(la);
    if (v < best) {
      best = v;
      best_log_a = la;
    }
  }
  const double width = (hi - lo) / grid;
  const double la = golden_min(neg_margin, best_log_a - width, best_log_a + width, 1e-12);
  const double refined = neg_margin(la);
  OneSidedFeasibility result;
  result.margin = -std::min(refined, best);
  result.alpha_star = std::exp(refined <= best ? la : best_log_a);
  result.feasible = result.margin >= -1e-9;
  return result;
}

std::vector<TradeoffPoint> one_sided_curve(int points) {
  if (points < 2) throw std::invalid_argument("one_sided_curve: points >= 2");
  const double x_star = optimal_regret_constant();

  // Cap points w = -x1 (slope 0) and v = x0 (slope 1). Equality in
  // the alpha-condition holds along the whole (c1, c2) family; being
  // on the boundary additionally needs alpha to be the maximizer,
  // which pins e^{w^2}/w + e^{v^2}/v = sqrt(pi)(erfi(v) + erfi(w)),
  // i.e. phi(v) = -phi(w). The pair must also keep both regrets below
  // x*: past that, a single expert's tangency alone certifies
  // feasibility and the family point leaves the boundary.
  auto point_of = [&](double w, double& c2, double& L, double& R) {
    const double v = envelope_partner(w, x_star);
    const double s = erfi(v) + erfi(w);
    c2 = erfi(w) / s;
    L = std::exp(w * w) / (kSqrtPi * s);
    R = std::exp(v * v) / (kSqrtPi * s);
  };

  // largest w keeping L_o clear of x* (0.05 of headroom so trimming
  // either regret by a visible amount breaks feasibility outright)
  double c2 = 0, L = 0, R = 0;
  double lo = x_star, hi = 3.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    point_of(mid, c2, L, R);
    (L < x_star - 0.05 ? lo : hi) = mid;
  }
  const double w_hi = 0.5 * (lo + hi);
  point_of(w_hi, c2, L, R);
  const double c2_hi = c2;
  const double c2_lo = 1.0 - c2_hi;  // mirror branch, L and R swapped
  const double w_lo_end = envelope_partner(w_hi, x_star);

  std::vector<TradeoffPoint> curve;
  curve.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double c2_target =
        c2_lo + (c2_hi - c2_lo) * (i + 1) / (points + 1);
    double w_a = w_lo_end, w_b = w_hi;
    for (int iter = 0; iter < 100; ++iter) {
      const double w = 0.5 * (w_a + w_b);
      point_of(w, c2, L, R);
      (c2 < c2_target ? w_a : w_b) = w;
    }
    point_of(0.5 * (w_a + w_b), c2, L, R);
    TradeoffPoint p;
    p.kind = TradeoffPoint::Kind::Experts;
    p.r1 = L;  // L_o
    p.r2 = R;  // R_o
    curve.push_back(p);
  }
  return curve;
}

TradeoffPoint experts_reductions(const TradeoffPoint& p) {
  TradeoffPoint out;
  switch (p.kind) {
    case TradeoffPoint::Kind::TwoSided:
      out = {p.r1 / 2, p.r2 / 2, TradeoffPoint::Kind::MaxAvg};
      break;
    case TradeoffPoint::Kind::MaxAvg:
      out = {p.r1 * 2, p.r2 * 2, TradeoffPoint::Kind::TwoSided};
      break;
    case TradeoffPoint::Kind::OneSided:
      out = {p.r2, p.r1, TradeoffPoint::Kind::Experts};
      break;
    case TradeoffPoint::Kind::Experts:
      out = {p.r2, p.r1, TradeoffPoint::Kind::OneSided};
      break;
  }
  return out;
}

double optimal_regret_constant() {
  auto objective = [](double a) { return a / (kSqrtPi * erfi(std::sqrt(std::log(a)))); };
  return objective(golden_min(objective, 1.0 + 1e-9, 100.0, 1e-10));
}

}  // namespace regret

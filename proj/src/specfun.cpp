#include "regret/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace regret {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSeriesCutoff = 3.0;
constexpr double kPayoffDomain = 8.0;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(what) + ": non-finite argument");
  }
}

// Maclaurin series (2/sqrt(pi)) * sum x^(2k+1) / (k! (2k+1)).
// All terms share the sign of x, so the sum is cancellation-free.
double erfi_series(double x) {
  double power = x;  // x^(2k+1) / k!
  double sum = x;
  for (int k = 1; k < 400; ++k) {
    power *= x * x / k;
    const double term = power / (2 * k + 1);
    sum += term;
    if (k >= 30 && std::fabs(term) < 1e-17 * std::fabs(sum)) break;
  }
  return sum * 2.0 / kSqrtPi;
}

// Rybicki's method: D(x) ~ (1/sqrt(pi)) * sum_{n odd} exp(-(x-nh)^2)/n,
// with error exponentially small in 1/h^2. h = 0.2 gives ~1e-15.
double dawson_rybicki(double x) {
  constexpr double h = 0.2;
  int n0 = static_cast<int>(std::lround(x / h));
  if (n0 % 2 == 0) ++n0;
  double sum = 0.0;
  for (int n = n0 - 33 * 2; n <= n0 + 33 * 2; n += 2) {
    if (n == 0) continue;
    const double t = x - n * h;
    sum += std::exp(-t * t) / n;
  }
  return sum / kSqrtPi;
}

}  // namespace

double dawson(double x) {
  require_finite(x, "dawson");
  if (x < 0) return -dawson(-x);
  if (x <= kSeriesCutoff) {
    return 0.5 * kSqrtPi * std::exp(-x * x) * erfi_series(x);
  }
  return dawson_rybicki(x);
}

double erfi(double x) {
  require_finite(x, "erfi");
  const double ax = std::fabs(x);
  if (ax <= kSeriesCutoff) return erfi_series(x);
  const double d = dawson_rybicki(ax);
  const double v = 2.0 / kSqrtPi * std::exp(ax * ax) * d;
  return x < 0 ? -v : v;
}

double erfi_inverse(double y) {
  require_finite(y, "erfi_inverse");
  if (y == 0.0) return 0.0;
  if (y < 0.0) return -erfi_inverse(-y);
  double lo = 0.0, hi = 8.0;
  if (erfi(hi) <= y) return hi;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (erfi(mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double hermite_payoff(const HermiteParams& p, double x) {
  require_finite(x, "hermite_payoff");
  if (std::fabs(x) > kPayoffDomain) {
    throw std::domain_error("hermite_payoff: |x| > 8");
  }
  return p.c1 * (x * erfi(x) - std::exp(x * x) / kSqrtPi) + p.c2 * x;
}

double hermite_payoff_derivative(const HermiteParams& p, double x) {
  require_finite(x, "hermite_payoff_derivative");
  if (std::fabs(x) > kPayoffDomain) {
    throw std::domain_error("hermite_payoff_derivative: |x| > 8");
  }
  return p.c1 * erfi(x) + p.c2;
}

CappedHermite::CappedHermite(const HermiteParams& p) : params_(p) {
  if (!(p.c1 >= 0.0)) {
    throw std::domain_error("CappedHermite: c1 must be >= 0");
  }
  if (p.c1 == 0.0) {
    if (std::fabs(p.c2) <= 1.0) {
      uncapped_ = true;
    } else {
      // |F'| > 1 everywhere; the capped function is sign(c2) * x.
      degenerate_linear_ = true;
      x_lo_ = x_hi_ = 0.0;
      f_lo_ = f_hi_ = 0.0;
    }
    return;
  }
  // F' = c1*erfi(x) + c2 is strictly increasing.
  x_hi_ = erfi_inverse((1.0 - p.c2) / p.c1);
  x_lo_ = erfi_inverse((-1.0 - p.c2) / p.c1);
  f_hi_ = hermite_payoff(p, x_hi_);
  f_lo_ = hermite_payoff(p, x_lo_);
}

CappedEval CappedHermite::operator()(double x) const {
  require_finite(x, "CappedHermite");
  if (uncapped_) {
    return {params_.c2 * x, params_.c2};
  }
  if (degenerate_linear_) {
    const double s = params_.c2 > 0 ? 1.0 : -1.0;
    return {s * x, s};
  }
  if (x > x_hi_) return {f_hi_ + (x - x_hi_), 1.0};
  if (x < x_lo_) return {f_lo_ - (x - x_lo_), -1.0};
  return {hermite_payoff(params_, x), hermite_payoff_derivative(params_, x)};
}

CappedEval capped_hermite(const HermiteParams& p, double x) {
  return CappedHermite(p)(x);
}

}  // namespace regret

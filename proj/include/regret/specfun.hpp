#pragma once

#include <utility>

namespace regret {

/// Parameters (c1, c2) selecting a solution of the Hermite equation
/// g'' - 2xg' + 2g = 0. The general solution is
///   F(x) = c1 * (x*erfi(x) - exp(x^2)/sqrt(pi)) + c2 * x.
struct HermiteParams {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// Imaginary error function, (2/sqrt(pi)) * integral_0^x exp(t^2) dt.
///
/// Maclaurin series for |x| <= 3 (all terms positive, no cancellation);
/// for larger |x| uses erfi(x) = (2/sqrt(pi)) * exp(x^2) * D(x) with
/// Rybicki's sampling evaluation of the Dawson function D.
/// Relative error below 1e-12 on [-6, 6].
double erfi(double x);

/// Dawson function D(x) = exp(-x^2) * integral_0^x exp(t^2) dt.
double dawson(double x);

/// Inverse of erfi restricted to [-8, 8]; targets beyond erfi(+-8)
/// saturate at the bracket ends. Bisection to 1e-12.
double erfi_inverse(double y);

/// F_{c1,c2}(x) = c1*(x*erfi(x) - exp(x^2)/sqrt(pi)) + c2*x.
/// Domain |x| <= 8 (exp(x^2) leaves double range near 27).
double hermite_payoff(const HermiteParams& p, double x);

/// F'(x) = c1*erfi(x) + c2; also the limiting betting strategy.
double hermite_payoff_derivative(const HermiteParams& p, double x);

/// Value/slope pair of the slope-capped payoff function.
struct CappedEval {
  double value = 0.0;
  double slope = 0.0;
};

/// The function F-hat obtained from F_{c1,c2} by capping the derivative
/// to [-1, 1]. Cap points are the solutions of |F'| = 1; outside them
/// F-hat continues linearly with slope +-1. Continuous and 1-Lipschitz.
class CappedHermite {
 public:
  /// Requires c1 >= 0. Cap points found by bisection on the monotone F'.
  explicit CappedHermite(const HermiteParams& p);

  CappedEval operator()(double x) const;

  double lower_cap() const { return x_lo_; }
  double upper_cap() const { return x_hi_; }
  const HermiteParams& params() const { return params_; }

 private:
  HermiteParams params_;
  double x_lo_ = 0.0;   // where F' = -1
  double x_hi_ = 0.0;   // where F' = +1
  double f_lo_ = 0.0;   // F(x_lo_)
  double f_hi_ = 0.0;   // F(x_hi_)
  bool uncapped_ = false;       // |F'| < 1 everywhere
  bool degenerate_linear_ = false;  // c1 = 0, |c2| > 1
};

/// One-shot evaluation of F-hat; prefer CappedHermite for repeated use.
CappedEval capped_hermite(const HermiteParams& p, double x);

}  // namespace regret

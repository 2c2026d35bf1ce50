#include "regret/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace regret {

Strategy Strategy::curve_induced(PayoffCurve curve) {
  Strategy s;
  s.kind_ = Kind::CurveInduced;
  s.n_ = curve.n;
  s.bet_bound_ = curve.bounded_bets;
  s.curve_ = std::make_shared<const PayoffCurve>(std::move(curve));
  return s;
}

Strategy Strategy::hermite(HermiteParams p, int n, bool bet_bound) {
  Strategy s;
  s.kind_ = Kind::Hermite;
  s.n_ = n;
  s.params_ = p;
  s.bet_bound_ = bet_bound;
  s.sqrt_n_ = std::sqrt(static_cast<double>(n));
  if (bet_bound && p.c1 >= 0) {
    s.capped_ = std::make_shared<const CappedHermite>(p);
  }
  return s;
}

Strategy Strategy::weighted_majority(int n) {
  Strategy s;
  s.kind_ = Kind::WeightedMajority;
  s.n_ = n;
  s.sqrt_n_ = std::sqrt(static_cast<double>(n));
  return s;
}

Strategy Strategy::constant_plus() {
  Strategy s;
  s.kind_ = Kind::ConstantPlus;
  return s;
}

Strategy Strategy::constant_minus() {
  Strategy s;
  s.kind_ = Kind::ConstantMinus;
  return s;
}

double Strategy::bet(double x) const {
  if (!std::isfinite(x)) throw std::domain_error("Strategy::bet: non-finite height");
  switch (kind_) {
    case Kind::ConstantPlus:
      return 1.0;
    case Kind::ConstantMinus:
      return -1.0;
    case Kind::WeightedMajority:
      return std::tanh(x / sqrt_n_);
    case Kind::CurveInduced: {
      const double rho = curve_->rho();
      if (!curve_->in_range(rho * x + 1) || !curve_->in_range(rho * x - 1)) {
        throw std::domain_error("Strategy::bet: height out of curve range");
      }
      return (curve_->value_at(rho * x + 1) - curve_->value_at(rho * x - 1)) / 2;
    }
    case Kind::Hermite: {
      const double y = x / sqrt_n_;
      if (bet_bound_ && capped_) {
        // The capped slope IS the clamped bet; avoids erfi overflow far out.
        return (*capped_)(y).slope;
      }
      const double b = hermite_payoff_derivative(params_, std::clamp(y, -8.0, 8.0));
      return bet_bound_ ? std::clamp(b, -1.0, 1.0) : b;
    }
  }
  throw std::logic_error("Strategy::bet: unreachable");
}

std::string Strategy::name() const {
  switch (kind_) {
    case Kind::CurveInduced:
      return "curve";
    case Kind::Hermite:
      return "hermite";
    case Kind::WeightedMajority:
      return "wm";
    case Kind::ConstantPlus:
      return "const+";
    case Kind::ConstantMinus:
      return "const-";
  }
  return "?";
}

Strategy Strategy::parse(const std::string& spec, int n) {
  if (spec == "wm") return weighted_majority(n);
  if (spec == "const:+") return constant_plus();
  if (spec == "const:-") return constant_minus();
  if (spec.rfind("curve:", 0) == 0) {
    return curve_induced(read_curve_file(spec.substr(6)));
  }
  if (spec.rfind("hermite:", 0) == 0) {
    HermiteParams p;
    std::string rest = spec.substr(8);
    std::replace(rest.begin(), rest.end(), ',', ' ');
    std::istringstream is(rest);
    std::string token;
    bool saw_c1 = false, saw_c2 = false;
    while (is >> token) {
      if (token.rfind("c1=", 0) == 0) {
        p.c1 = std::stod(token.substr(3));
        saw_c1 = true;
      } else if (token.rfind("c2=", 0) == 0) {
        p.c2 = std::stod(token.substr(3));
        saw_c2 = true;
      } else {
        throw std::invalid_argument("bad strategy spec token: " + token);
      }
    }
    if (!saw_c1 || !saw_c2) {
      throw std::invalid_argument("hermite spec needs c1=<r>,c2=<r>");
    }
    return hermite(p, n);
  }
  throw std::invalid_argument("unknown strategy spec: " + spec);
}

}  // namespace regret

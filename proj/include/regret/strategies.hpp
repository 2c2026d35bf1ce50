#pragma once

#include <memory>
#include <string>

#include "regret/curves.hpp"
#include "regret/specfun.hpp"

namespace regret {

/// A betting rule: discounted height -> bet. All kinds are immutable
/// and evaluation is pure.
class Strategy {
 public:
  enum class Kind {
    CurveInduced,      // (f(rho x + 1) - f(rho x - 1)) / 2
    Hermite,           // c1 * erfi(x / sqrt(n)) + c2, clamped when bounded
    WeightedMajority,  // tanh(x / sqrt(n))
    ConstantPlus,
    ConstantMinus,
  };

  static Strategy curve_induced(PayoffCurve curve);
  static Strategy hermite(HermiteParams p, int n, bool bet_bound = true);
  static Strategy weighted_majority(int n);
  static Strategy constant_plus();
  static Strategy constant_minus();

  /// Parses a CLI spec string:
  ///   hermite:c1=<r>,c2=<r> | wm | curve:<path> | const:+ | const:-
  /// n supplies the window for hermite/wm kinds.
  static Strategy parse(const std::string& spec, int n);

  double bet(double x) const;

  Kind kind() const { return kind_; }
  std::string name() const;

 private:
  Strategy() = default;

  Kind kind_ = Kind::ConstantPlus;
  int n_ = 0;
  bool bet_bound_ = true;
  HermiteParams params_;
  double sqrt_n_ = 1.0;
  std::shared_ptr<const PayoffCurve> curve_;        // CurveInduced
  std::shared_ptr<const CappedHermite> capped_;     // Hermite, bounded
};

}  // namespace regret

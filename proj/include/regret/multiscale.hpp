#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace regret {

/// Two payoff fields g1, g2 on a square (x1, x2) grid for two window
/// scales n1 = a1*n and n2 = a2*n. Row-major, index = i * side + j
/// with x1 = -box + i*h, x2 = -box + j*h.
struct ScaleGrid {
  double a1 = 1.0;
  double a2 = 2.0;
  double box = 3.0;  // grid covers [-box, box]^2
  double h = 0.02;
  std::size_t side = 0;
  std::vector<double> g1;
  std::vector<double> g2;

  double x1_at(std::size_t i) const { return -box + i * h; }
  double x2_at(std::size_t j) const { return -box + j * h; }
  std::size_t index(std::size_t i, std::size_t j) const { return i * side + j; }

  /// Samples the two fields on a fresh grid. Requires a1 != a2 and
  /// h <= 0.05.
  static ScaleGrid sample(double a1, double a2, double box, double h,
                          const std::function<double(double, double)>& field1,
                          const std::function<double(double, double)>& field2);
};

/// Interior residuals of the two-scale system:
///   E1 = -1/2 (d1+d2)^2 g1 + (a1^2 x1 d1 + a2^2 x2 d2) g1 - a1^2 g1
///   E2 = analogous with -a2^2 g2
///   slack = E1 + E2 - |(d1+d2)(g1 - g2)|
/// all by central differences; fields cover the interior
/// (side-2) x (side-2) nodes.
struct ResidualFields {
  std::size_t side = 0;  // interior side length
  std::vector<double> e1;
  std::vector<double> e2;
  std::vector<double> slack;
};
ResidualFields residual_fields(const ScaleGrid& grid);

struct PairReport {
  bool feasible = false;
  double min_e1 = 0.0, min_e2 = 0.0, min_slack = 0.0;
  double argmin_e1[2] = {0, 0};
  double argmin_e2[2] = {0, 0};
  double argmin_slack[2] = {0, 0};
};
PairReport check_pair(const ScaleGrid& grid, double tolerance);

/// Field CSV rows "x1,x2,g1,g2" on a complete square grid (any row
/// order); a1, a2 come from the caller.
ScaleGrid read_fields_csv(std::istream& in, double a1, double a2);
void write_report_json(std::ostream& out, const PairReport& report);

}  // namespace regret

#include "regret/multiscale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace regret {

ScaleGrid ScaleGrid::sample(double a1, double a2, double box, double h,
                            const std::function<double(double, double)>& field1,
                            const std::function<double(double, double)>& field2) {
  if (a1 <= 0 || a2 <= 0 || a1 == a2) {
    throw std::invalid_argument("ScaleGrid: need positive a1 != a2");
  }
  if (!(h > 0) || h > 0.05) throw std::invalid_argument("ScaleGrid: need 0 < h <= 0.05");
  ScaleGrid grid;
  grid.a1 = a1;
  grid.a2 = a2;
  grid.box = box;
  grid.h = h;
  grid.side = static_cast<std::size_t>(std::llround(2 * box / h)) + 1;
  grid.g1.resize(grid.side * grid.side);
  grid.g2.resize(grid.side * grid.side);
  for (std::size_t i = 0; i < grid.side; ++i) {
    for (std::size_t j = 0; j < grid.side; ++j) {
      grid.g1[grid.index(i, j)] = field1(grid.x1_at(i), grid.x2_at(j));
      grid.g2[grid.index(i, j)] = field2(grid.x1_at(i), grid.x2_at(j));
    }
  }
  return grid;
}

namespace {

struct Partials {
  double d1, d2, d11, d22, d12;
};

Partials partials_at(const std::vector<double>& g, const ScaleGrid& grid,
                     std::size_t i, std::size_t j) {
  const double h = grid.h;
  auto at = [&](std::size_t a, std::size_t b) { return g[grid.index(a, b)]; };
  Partials p;
  p.d1 = (at(i + 1, j) - at(i - 1, j)) / (2 * h);
  p.d2 = (at(i, j + 1) - at(i, j - 1)) / (2 * h);
  p.d11 = (at(i + 1, j) - 2 * at(i, j) + at(i - 1, j)) / (h * h);
  p.d22 = (at(i, j + 1) - 2 * at(i, j) + at(i, j - 1)) / (h * h);
  p.d12 = (at(i + 1, j + 1) - at(i + 1, j - 1) - at(i - 1, j + 1) + at(i - 1, j - 1)) /
          (4 * h * h);
  return p;
}

// E = -1/2 (d1+d2)^2 g + (a1^2 x1 d1 + a2^2 x2 d2) g - c * g
double elliptic_residual(const Partials& p, double g, double x1, double x2,
                         double a1, double a2, double c) {
  return -0.5 * (p.d11 + 2 * p.d12 + p.d22) + a1 * a1 * x1 * p.d1 +
         a2 * a2 * x2 * p.d2 - c * g;
}

}  // namespace

ResidualFields residual_fields(const ScaleGrid& grid) {
  if (grid.side < 3) throw std::domain_error("residual_fields: grid has no interior");
  ResidualFields out;
  out.side = grid.side - 2;
  out.e1.resize(out.side * out.side);
  out.e2.resize(out.side * out.side);
  out.slack.resize(out.side * out.side);
  for (std::size_t i = 1; i + 1 < grid.side; ++i) {
    for (std::size_t j = 1; j + 1 < grid.side; ++j) {
      const double x1 = grid.x1_at(i), x2 = grid.x2_at(j);
      const Partials p1 = partials_at(grid.g1, grid, i, j);
      const Partials p2 = partials_at(grid.g2, grid, i, j);
      const double g1 = grid.g1[grid.index(i, j)];
      const double g2 = grid.g2[grid.index(i, j)];
      const double e1 =
          elliptic_residual(p1, g1, x1, x2, grid.a1, grid.a2, grid.a1 * grid.a1);
      const double e2 =
          elliptic_residual(p2, g2, x1, x2, grid.a1, grid.a2, grid.a2 * grid.a2);
      const double cross = (p1.d1 + p1.d2) - (p2.d1 + p2.d2);
      const std::size_t k = (i - 1) * out.side + (j - 1);
      out.e1[k] = e1;
      out.e2[k] = e2;
      out.slack[k] = e1 + e2 - std::fabs(cross);
    }
  }
  return out;
}

PairReport check_pair(const ScaleGrid& grid, double tolerance) {
  const ResidualFields fields = residual_fields(grid);
  PairReport report;
  report.min_e1 = report.min_e2 = report.min_slack =
      std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < fields.side; ++i) {
    for (std::size_t j = 0; j < fields.side; ++j) {
      const std::size_t k = i * fields.side + j;
      const double x1 = grid.x1_at(i + 1), x2 = grid.x2_at(j + 1);
      if (fields.e1[k] < report.min_e1) {
        report.min_e1 = fields.e1[k];
        report.argmin_e1[0] = x1;
        report.argmin_e1[1] = x2;
      }
      if (fields.e2[k] < report.min_e2) {
        report.min_e2 = fields.e2[k];
        report.argmin_e2[0] = x1;
        report.argmin_e2[1] = x2;
      }
      if (fields.slack[k] < report.min_slack) {
        report.min_slack = fields.slack[k];
        report.argmin_slack[0] = x1;
        report.argmin_slack[1] = x2;
      }
    }
  }
  report.feasible = report.min_e1 >= -tolerance && report.min_e2 >= -tolerance &&
                    report.min_slack >= -tolerance;
  return report;
}

ScaleGrid read_fields_csv(std::istream& in, double a1, double a2) {
  std::string line;
  std::map<std::pair<long, long>, std::pair<double, double>> rows;
  std::vector<double> coords;
  bool header_seen = false;
  double scale = 1e6;  // coordinate quantization for exact keying
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (line == "x1,x2,g1,g2") continue;  // header optional
    }
    std::istringstream row(line);
    double x1, x2, g1, g2;
    char c;
    if (!(row >> x1 >> c >> x2 >> c >> g1 >> c >> g2)) {
      throw std::runtime_error("fields CSV: malformed row: " + line);
    }
    rows[{std::llround(x1 * scale), std::llround(x2 * scale)}] = {g1, g2};
    coords.push_back(x1);
  }
  if (rows.empty()) throw std::runtime_error("fields CSV: no data rows");
  const auto side_sq = rows.size();
  const auto side = static_cast<std::size_t>(std::llround(std::sqrt(double(side_sq))));
  if (side * side != side_sq) {
    throw std::runtime_error("fields CSV: rows do not form a square grid");
  }
  const auto [min_it, max_it] = std::minmax_element(coords.begin(), coords.end());
  ScaleGrid grid;
  grid.a1 = a1;
  grid.a2 = a2;
  grid.box = *max_it;
  grid.side = side;
  grid.h = side > 1 ? (*max_it - *min_it) / (side - 1) : 1.0;
  grid.g1.resize(side * side);
  grid.g2.resize(side * side);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      const auto key = std::make_pair(std::llround(grid.x1_at(i) * scale),
                                      std::llround(grid.x2_at(j) * scale));
      const auto it = rows.find(key);
      if (it == rows.end()) {
        throw std::runtime_error("fields CSV: missing grid node");
      }
      grid.g1[grid.index(i, j)] = it->second.first;
      grid.g2[grid.index(i, j)] = it->second.second;
    }
  }
  return grid;
}

void write_report_json(std::ostream& out, const PairReport& report) {
  nlohmann::json j{
      {"feasible", report.feasible},
      {"min_e1", report.min_e1},
      {"min_e2", report.min_e2},
      {"min_slack", report.min_slack},
      {"argmin_e1", {report.argmin_e1[0], report.argmin_e1[1]}},
      {"argmin_e2", {report.argmin_e2[0], report.argmin_e2[1]}},
      {"argmin_slack", {report.argmin_slack[0], report.argmin_slack[1]}},
  };
  out << j.dump(2) << '\n';
}

}  // namespace regret

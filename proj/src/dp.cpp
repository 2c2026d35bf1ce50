#include "regret/dp.hpp"

#include <cmath>
#include <stdexcept>

namespace regret {

namespace {

std::size_t state_index(int t, long height) {
  if (height < -t || height > t || ((height + t) & 1L) != 0) {
    throw std::out_of_range("DPTable: height unreachable at time t");
  }
  return static_cast<std::size_t>((height + t) / 2);
}

BigInt binomial(int n, int k) {
  BigInt result = 1;
  for (int i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;
  }
  return result;
}

}  // namespace

const Rational& DPTable::s(int t, long height) const {
  if (t < 0 || t > T_) throw std::out_of_range("DPTable::s: bad time");
  return s_[t][state_index(t, height)];
}

const Rational& DPTable::bet(int t, long height) const {
  if (t < 0 || t >= T_) throw std::out_of_range("DPTable::bet: bad time");
  return bets_[t][state_index(t, height)];
}

DPTable minimax_table(int T, const Terminal& terminal) {
  if (T < 1 || T > 30) throw std::domain_error("minimax_table: T must be in [1, 30]");
  DPTable table;
  table.T_ = T;
  table.s_.resize(T + 1);
  table.bets_.resize(T);
  table.s_[T].reserve(T + 1);
  for (long x = -T; x <= T; x += 2) table.s_[T].push_back(terminal(x));
  for (int t = T - 1; t >= 0; --t) {
    auto& layer = table.s_[t];
    auto& bets = table.bets_[t];
    layer.reserve(t + 1);
    bets.reserve(t + 1);
    const auto& next = table.s_[t + 1];
    for (int i = 0; i <= t; ++i) {
      // state i has height -t + 2i; children sit at indices i and i+1
      layer.push_back((next[i + 1] + next[i]) / 2);
      bets.push_back((next[i + 1] - next[i]) / 2);
    }
  }
  return table;
}

CoverResult cover_feasibility(const Terminal& terminal, int T) {
  if (T < 1 || T > 60) throw std::domain_error("cover_feasibility: T must be in [1, 60]");
  CoverResult result;
  Rational sum = 0;
  for (int k = 0; k <= T; ++k) {
    sum += Rational(binomial(T, k)) * terminal(T - 2L * k);
  }
  result.sum_zero = sum == 0;
  result.lipschitz = true;
  for (long x = -T; x + 2 <= T; x += 2) {
    Rational step = terminal(x + 2) - terminal(x);
    if (step > 2 || step < -2) {
      result.lipschitz = false;
      break;
    }
  }
  return result;
}

Rational expected_abs_height(int T) {
  if (T < 1 || T > 60) throw std::domain_error("expected_abs_height: T must be in [1, 60]");
  BigInt numerator = 0;
  for (int k = 0; k <= T; ++k) {
    long h = T - 2L * k;
    numerator += binomial(T, k) * (h < 0 ? -h : h);
  }
  return Rational(numerator, BigInt(1) << T);
}

double alpha(double rho, int T) {
  if (!(rho > 0 && rho < 1)) throw std::domain_error("alpha: rho must be in (0, 1)");
  return (1.0 - std::pow(rho, 2.0 * T)) / (1.0 - rho * rho);
}

namespace {

// Returns s_t(h); the minimal necessary payoff obeys
//   rho * s_t(h) + b * bet >= s_{t+1}(rho h + b),
// so with the half-difference bet s_t(h) = (avg of children) / rho.
double discounted_value(int t, int T, double h, double rho,
                        const std::function<double(double)>& terminal,
                        double& max_abs_bet) {
  if (t == T) return terminal(h);
  const double up = discounted_value(t + 1, T, rho * h + 1, rho, terminal, max_abs_bet);
  const double down = discounted_value(t + 1, T, rho * h - 1, rho, terminal, max_abs_bet);
  const double bet = (up - down) / 2;
  if (std::fabs(bet) > max_abs_bet) max_abs_bet = std::fabs(bet);
  return (up + down) / (2 * rho);
}

}  // namespace

DiscountedMinimax discounted_minimax(int T, double rho,
                                     const std::function<double(double)>& terminal) {
  if (T < 1) throw std::domain_error("discounted_minimax: T must be >= 1");
  if (T > 22) {
    throw std::length_error("discounted_minimax: T > 22 exceeds the 2^T history tree budget");
  }
  if (!(rho > 0 && rho < 1)) throw std::domain_error("discounted_minimax: rho in (0,1)");
  DiscountedMinimax result;
  result.root_value = discounted_value(0, T, 0.0, rho, terminal, result.max_abs_bet);
  return result;
}

}  // namespace regret

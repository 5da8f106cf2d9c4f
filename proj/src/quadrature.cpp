#include "mellin/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "mellin/error.hpp"

namespace mellin::quadrature {

namespace {

Rule compute_gauss_legendre(int n) {
  Rule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

}  // namespace

const Rule& gauss_legendre(int n) {
  if (n < 1 || n > kMaxGaussOrder) throw ValidationError("Gauss-Legendre order out of range");
  static const auto table = [] {
    std::array<Rule, kMaxGaussOrder + 1> t;
    for (int k = 1; k <= kMaxGaussOrder; ++k) t[static_cast<std::size_t>(k)] = compute_gauss_legendre(k);
    return t;
  }();
  return table[static_cast<std::size_t>(n)];
}

void append_panel(Rule& out, double a, double b, int n) {
  const Rule& base = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < base.nodes.size(); ++i) {
    out.nodes.push_back(mid + half * base.nodes[i]);
    out.weights.push_back(half * base.weights[i]);
  }
}

double log_sum_exp(std::span<const double> terms) {
  double peak = -std::numeric_limits<double>::infinity();
  for (double v : terms) peak = std::max(peak, v);
  if (std::isinf(peak)) return peak;
  double acc = 0.0;
  for (double v : terms) {
    if (!std::isinf(v)) acc += std::exp(v - peak);
  }
  return peak + std::log(acc);
}

}  // namespace mellin::quadrature

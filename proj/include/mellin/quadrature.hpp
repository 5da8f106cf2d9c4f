#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mellin::quadrature {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

constexpr int kMaxGaussOrder = 64;

/// n-point Gauss-Legendre rule on [-1, 1], 1 <= n <= kMaxGaussOrder. Cached.
const Rule& gauss_legendre(int n);

/// Appends the n-point rule mapped to [a, b] onto `out`.
void append_panel(Rule& out, double a, double b, int n);

/// log(sum_i exp(terms[i])), skipping -inf entries; -inf when every entry is.
double log_sum_exp(std::span<const double> terms);

}  // namespace mellin::quadrature

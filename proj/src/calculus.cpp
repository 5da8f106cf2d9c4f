#include "mellin/calculus.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "mellin/config.hpp"
#include "mellin/error.hpp"
#include "mellin/quadrature.hpp"
#include "mellin/transform.hpp"

namespace mellin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kDirectMomentLimit = 20;

Complex stirling_sum(std::span<const double> row, std::span<const Complex> jet, double x) {
  Complex acc{};
  double xk = 1.0;
  for (std::size_t k = 0; k < row.size(); ++k) {
    acc += row[k] * xk * jet[k];
    xk *= x;
  }
  return acc;
}

Complex finite_difference_theta(const EvaluableFunction& f, double c, int r, double x) {
  const auto w = central_difference_weights(r, 4);
  const int p = static_cast<int>(w.size() / 2);
  const double u = std::log(x);
  const double step = Defaults::fd_step;
  Complex acc{};
  for (int j = -p; j <= p; ++j) {
    const double weight = w[static_cast<std::size_t>(j + p)];
    if (weight == 0.0) continue;
    const double v = u + j * step;
    acc += weight * std::exp(c * (v - u)) * f(std::exp(v));
  }
  return acc / std::pow(step, r);
}

}  // namespace

StirlingTable::StirlingTable(double c, int r_max) : c_(c), r_max_(r_max) {
  if (r_max < 0) throw ValidationError("Stirling order must be nonnegative");
  if (!std::isfinite(c)) throw ValidationError("Mellin parameter c must be finite");
  rows_.reserve(static_cast<std::size_t>(r_max) + 1);
  rows_.push_back({1.0});
  for (int r = 0; r < r_max; ++r) {
    const auto& prev = rows_.back();
    std::vector<double> next(static_cast<std::size_t>(r) + 2, 0.0);
    for (int k = 0; k <= r + 1; ++k) {
      const double lower = k > 0 ? prev[static_cast<std::size_t>(k - 1)] : 0.0;
      const double same = k <= r ? prev[static_cast<std::size_t>(k)] : 0.0;
      next[static_cast<std::size_t>(k)] = lower + (k + c) * same;
      if (!std::isfinite(next[static_cast<std::size_t>(k)])) {
        throw NumericalError("Stirling coefficient overflow at r=" + std::to_string(r + 1));
      }
    }
    rows_.push_back(std::move(next));
  }
}

double StirlingTable::operator()(int r, int k) const {
  if (r < 0 || r > r_max_) throw ValidationError("Stirling row out of range");
  if (k < 0 || k > r) return 0.0;
  return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
}

std::vector<double> StirlingTable::row(int r) const {
  if (r < 0 || r > r_max_) throw ValidationError("Stirling row out of range");
  return rows_[static_cast<std::size_t>(r)];
}

std::vector<double> stirling_coeffs(int r, double c) {
  if (r < 0) throw ValidationError("Stirling order must be nonnegative");
  return StirlingTable(c, r).row(r);
}

EvaluableFunction mellin_translate(const EvaluableFunction& f, double h, double c) {
  if (!(h > 0.0) || !std::isfinite(h)) throw ValidationError("Mellin translation needs h > 0");
  const double hc = std::pow(h, c);
  auto value = [f, h, hc](double x) { return hc * f(h * x); };
  if (!f.has_derivatives()) return EvaluableFunction(value);
  return EvaluableFunction::with_jet(value, [f, h, hc](double x, int k) {
    auto jet = f.jet(h * x, k);
    double scale = hc;
    for (auto& v : jet) {
      v *= scale;
      scale *= h;
    }
    return jet;
  });
}

std::vector<double> central_difference_weights(int derivative, int accuracy) {
  if (derivative < 0) throw ValidationError("derivative order must be nonnegative");
  if (accuracy < 2 || accuracy % 2 != 0) throw ValidationError("accuracy order must be even and >= 2");
  const int p = (derivative + 1) / 2 - 1 + accuracy / 2;
  const int count = 2 * p + 1;
  // Fornberg's recursion for weights at z = 0 over nodes -p..p.
  std::vector<double> nodes(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) nodes[static_cast<std::size_t>(i)] = i - p;
  const auto cols = static_cast<std::size_t>(derivative) + 1;
  std::vector<std::vector<double>> c(static_cast<std::size_t>(count), std::vector<double>(cols, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0];
  c[0][0] = 1.0;
  for (int i = 1; i < count; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    const int mn = std::min(i, derivative);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[ii];
    for (int j = 0; j < i; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      const double c3 = nodes[ii] - nodes[jj];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          const auto kk = static_cast<std::size_t>(k);
          c[ii][kk] = c1 * (k * c[ii - 1][kk - 1] - c5 * c[ii - 1][kk]) / c2;
        }
        c[ii][0] = -c1 * c5 * c[ii - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        const auto kk = static_cast<std::size_t>(k);
        c[jj][kk] = (c4 * c[jj][kk] - k * c[jj][kk - 1]) / c3;
      }
      c[jj][0] = c4 * c[jj][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) w[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)][cols - 1];
  return w;
}

Complex mellin_derivative(const EvaluableFunction& f, double c, int r, double x, DerivativePolicy policy) {
  if (r < 0) throw ValidationError("derivative order must be nonnegative");
  if (!(x > 0.0)) throw ValidationError("x must be positive");
  if (r == 0) return f(x);
  const bool analytic = f.has_derivatives() && policy != DerivativePolicy::finite_difference;
  if (analytic) {
    const auto jet = f.jet(x, r);
    return stirling_sum(stirling_coeffs(r, c), jet, x);
  }
  if (policy == DerivativePolicy::analytic_only) throw NumericalError("derivative unavailable");
  return finite_difference_theta(f, c, r, x);
}

SampledSignal mellin_derivative_on_grid(const EvaluableFunction& f, double c, int r, const GeometricGrid& grid,
                                        DerivativePolicy policy) {
  std::vector<Complex> values(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    try {
      values[static_cast<std::size_t>(j)] = mellin_derivative(f, c, r, grid.x(static_cast<std::size_t>(j)), policy);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return SampledSignal(grid, c, std::move(values));
}

std::vector<SampledSignal> mellin_derivatives_on_grid(const EvaluableFunction& f, double c, int r_max,
                                                      const GeometricGrid& grid) {
  if (r_max < 0) throw ValidationError("derivative order must be nonnegative");
  if (!f.has_derivatives()) throw NumericalError("derivative unavailable");
  const StirlingTable table(c, r_max);
  const auto orders = static_cast<std::size_t>(r_max) + 1;
  std::vector<std::vector<Complex>> values(orders, std::vector<Complex>(grid.size()));
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    try {
      const auto jj = static_cast<std::size_t>(j);
      const double x = grid.x(jj);
      const auto jet = f.jet(x, r_max);
      values[0][jj] = jet[0];
      for (int r = 1; r <= r_max; ++r) {
        const auto row = table.row(r);
        values[static_cast<std::size_t>(r)][jj] = stirling_sum(row, jet, x);
      }
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<SampledSignal> out;
  out.reserve(orders);
  for (auto& v : values) out.emplace_back(grid, c, std::move(v));
  return out;
}

double log_theta_norm(const Spectrum& spectrum, int r) {
  if (r < 0) throw ValidationError("derivative order must be nonnegative");
  const auto w = trapezoid_weights(spectrum.size(), spectrum.dt());
  std::vector<double> terms(spectrum.size());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const double t = spectrum.t(k);
    const double mag = std::abs(spectrum.values()[k]);
    if (mag == 0.0 || (r > 0 && t == 0.0)) {
      terms[k] = -std::numeric_limits<double>::infinity();
      continue;
    }
    terms[k] = std::log(w[k]) + 2.0 * std::log(mag) + (r > 0 ? 2.0 * r * std::log(std::abs(t)) : 0.0);
  }
  return 0.5 * (quadrature::log_sum_exp(terms) - std::log(kTwoPi));
}

double theta_norm(const Spectrum& spectrum, int r, MomentMode mode) {
  if (r < 0) throw ValidationError("derivative order must be nonnegative");
  if (mode == MomentMode::log_domain) return std::exp(log_theta_norm(spectrum, r));
  if (r > kDirectMomentLimit) throw NumericalError("direct moment accumulation refused for r > 20");
  const auto w = trapezoid_weights(spectrum.size(), spectrum.dt());
  double acc = 0.0;
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    acc += w[k] * std::pow(spectrum.t(k), 2 * r) * std::norm(spectrum.values()[k]);
  }
  return std::sqrt(acc / kTwoPi);
}

double theta_norm(const BandlimitedModel& model, int r, MomentMode mode) {
  if (r < 0) throw ValidationError("derivative order must be nonnegative");
  if (mode == MomentMode::direct && r > kDirectMomentLimit) {
    throw NumericalError("direct moment accumulation refused for r > 20");
  }
  return std::exp(model.log_theta_norm(r));
}

double derivative_spectrum_gap(const SampledSignal& f, const SampledSignal& theta_f, int r,
                               const SpectrumShape& shape) {
  if (r < 0) throw ValidationError("derivative order must be nonnegative");
  if (!(f.grid() == theta_f.grid()) || f.c() != theta_f.c()) {
    throw ValidationError("f and Theta f must share grid and c");
  }
  const Spectrum lhs = mellin_forward(theta_f, shape);
  const Spectrum rhs = mellin_forward(f, shape);
  const auto w = trapezoid_weights(lhs.size(), lhs.dt());
  double diff = 0.0;
  double ref = 0.0;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    Complex factor{1.0, 0.0};
    for (int j = 0; j < r; ++j) factor *= Complex(0.0, -lhs.t(k));
    const Complex expected = factor * rhs.values()[k];
    diff += w[k] * std::norm(lhs.values()[k] - expected);
    ref += w[k] * std::norm(expected);
  }
  if (ref == 0.0) throw NumericalError("zero norm");
  return std::sqrt(diff / ref);
}

double derivative_spectrum_gap(const EvaluableFunction& f, double c, const GeometricGrid& grid, int r,
                               const SpectrumShape& shape) {
  const SampledSignal base = SampledSignal::sample(f, grid, c);
  const SampledSignal theta = r == 0 ? base : mellin_derivative_on_grid(f, c, r, grid);
  return derivative_spectrum_gap(base, theta, r, shape);
}

}  // namespace mellin

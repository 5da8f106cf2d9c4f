#include "mellin/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "mellin/config.hpp"
#include "mellin/error.hpp"
#include "mellin/kernels.hpp"

namespace mellin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double weighted_l2(std::span<const Complex> values, double step) {
  const auto w = trapezoid_weights(values.size(), step);
  double acc = 0.0;
  for (std::size_t j = 0; j < values.size(); ++j) acc += w[j] * std::norm(values[j]);
  return std::sqrt(acc);
}

void require_same_grid(const SampledSignal& a, const SampledSignal& b) {
  if (!(a.grid() == b.grid())) throw ValidationError("signals live on different grids");
  if (a.c() != b.c()) throw ValidationError("signals carry different Mellin parameters");
}

}  // namespace

EvaluableFunction log_substitute(const EvaluableFunction& f, double c) {
  return EvaluableFunction([f, c](double u) { return std::exp(c * u) * f(std::exp(u)); });
}

Spectrum mellin_forward(const SampledSignal& signal, const SpectrumShape& shape) {
  validate_shape(shape);
  const GeometricGrid& grid = signal.grid();
  const auto h = signal.weighted();
  const auto w = trapezoid_weights(grid.size(), grid.du());

  std::vector<Complex> coeffs(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) coeffs[j] = w[j] * h[j];
  const auto nodes = grid.log_points();

  const std::size_t half = (shape.m - 1) / 2;
  const double dt = 2.0 * shape.t_max / static_cast<double>(shape.m - 1);
  const kernels::Lattice lattice{-static_cast<double>(half) * dt, dt, shape.m};

  std::vector<Complex> values(shape.m);
  kernels::phase_sum(nodes, coeffs, lattice, +1.0, values);
  Spectrum spectrum(signal.c(), shape.t_max, std::move(values));

  double peak = 0.0;
  for (const auto& v : h) peak = std::max(peak, std::abs(v));
  // outermost few points rather than the last one, which may sit on a zero of h
  double ends = 0.0;
  const std::size_t edge = std::min<std::size_t>(8, h.size() / 2);
  for (std::size_t j = 0; j < edge; ++j) ends = std::max({ends, std::abs(h[j]), std::abs(h[h.size() - 1 - j])});
  if (peak > 0.0 && ends > Defaults::truncation_threshold * peak) {
    char msg[160];
    std::snprintf(msg, sizeof msg, "truncation: |h| near the grid ends reaches %.3g of its peak (threshold %.0e)",
                  ends / peak, Defaults::truncation_threshold);
    spectrum.add_diagnostic(msg);
  }
  return spectrum;
}

SampledSignal mellin_inverse(const Spectrum& spectrum, const GeometricGrid& grid) {
  const auto w = trapezoid_weights(spectrum.size(), spectrum.dt());
  std::vector<Complex> coeffs(spectrum.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = w[k] * spectrum.values()[k] / kTwoPi;
  const auto nodes = spectrum.t_points();

  std::vector<Complex> h(grid.size());
  kernels::phase_sum(nodes, coeffs, kernels::Lattice{grid.u_min(), grid.du(), grid.size()}, -1.0, h);
  for (std::size_t j = 0; j < h.size(); ++j) h[j] *= std::exp(-spectrum.c() * grid.u(j));
  return SampledSignal(grid, spectrum.c(), std::move(h));
}

double x2c_norm(const SampledSignal& signal) {
  return weighted_l2(signal.weighted(), signal.grid().du());
}

double xc_norm(const SampledSignal& signal) {
  const auto h = signal.weighted();
  const auto w = trapezoid_weights(h.size(), signal.grid().du());
  double acc = 0.0;
  for (std::size_t j = 0; j < h.size(); ++j) acc += w[j] * std::abs(h[j]);
  return acc;
}

double spectrum_l2_norm(const Spectrum& spectrum) { return weighted_l2(spectrum.values(), spectrum.dt()); }

double plancherel_gap(const SampledSignal& signal, const SpectrumShape& shape) {
  const double norm = x2c_norm(signal);
  if (norm == 0.0) throw NumericalError("zero norm");
  const double spectral = spectrum_l2_norm(mellin_forward(signal, shape)) / std::sqrt(kTwoPi);
  return std::abs(norm - spectral) / norm;
}

double relative_l2_error(const SampledSignal& approx, const SampledSignal& exact) {
  require_same_grid(approx, exact);
  const auto a = approx.weighted();
  const auto e = exact.weighted();
  std::vector<Complex> diff(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) diff[j] = a[j] - e[j];
  const double denom = weighted_l2(e, exact.grid().du());
  if (denom == 0.0) throw NumericalError("zero norm");
  return weighted_l2(diff, exact.grid().du()) / denom;
}

}  // namespace mellin

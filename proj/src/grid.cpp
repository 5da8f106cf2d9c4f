#include "mellin/grid.hpp"

#include <cmath>
#include <utility>

#include "mellin/error.hpp"

namespace mellin {

namespace {

void require_finite(std::span<const Complex> values, const char* what) {
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (!std::isfinite(values[j].real()) || !std::isfinite(values[j].imag())) {
      throw ValidationError(std::string(what) + ": non-finite value at index " + std::to_string(j));
    }
  }
}

}  // namespace

GeometricGrid::GeometricGrid(double u_min, double u_max, std::size_t n)
    : u_min_(u_min), u_max_(u_max), n_(n), du_(0.0) {
  if (n < 2) throw ValidationError("grid needs at least 2 points");
  if (!std::isfinite(u_min) || !std::isfinite(u_max) || !(u_min < u_max)) {
    throw ValidationError("grid needs finite u_min < u_max");
  }
  // exp() must stay finite and nonzero at both ends.
  if (u_min < -700.0 || u_max > 700.0) throw ValidationError("grid log-extent outside [-700, 700]");
  du_ = (u_max - u_min) / static_cast<double>(n - 1);
}

double GeometricGrid::u(std::size_t j) const {
  if (j + 1 == n_) return u_max_;
  return std::fma(static_cast<double>(j), du_, u_min_);
}

double GeometricGrid::x(std::size_t j) const { return std::exp(u(j)); }

std::vector<double> GeometricGrid::log_points() const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = u(j);
  return out;
}

std::vector<double> GeometricGrid::points() const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = x(j);
  return out;
}

SampledSignal::SampledSignal(GeometricGrid grid, double c, std::vector<Complex> values)
    : grid_(std::move(grid)), c_(c), values_(std::move(values)) {
  if (!std::isfinite(c)) throw ValidationError("Mellin parameter c must be finite");
  if (values_.size() != grid_.size()) {
    throw ValidationError("signal length " + std::to_string(values_.size()) +
                          " does not match grid size " + std::to_string(grid_.size()));
  }
  require_finite(values_, "signal");
}

SampledSignal SampledSignal::sample(const EvaluableFunction& f, const GeometricGrid& grid, double c) {
  std::vector<Complex> values(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) values[j] = f(grid.x(j));
  return SampledSignal(grid, c, std::move(values));
}

std::vector<Complex> SampledSignal::weighted() const {
  std::vector<Complex> h(values_.size());
  for (std::size_t j = 0; j < h.size(); ++j) h[j] = std::exp(c_ * grid_.u(j)) * values_[j];
  return h;
}

void validate_shape(const SpectrumShape& shape) {
  if (!(shape.t_max > 0.0) || !std::isfinite(shape.t_max)) throw ValidationError("t_max must be positive");
  if (shape.m < 3 || shape.m % 2 == 0) throw ValidationError("spectrum point count m must be odd and >= 3");
}

Spectrum::Spectrum(double c, double t_max, std::vector<Complex> values)
    : c_(c), t_max_(t_max), values_(std::move(values)) {
  if (!std::isfinite(c)) throw ValidationError("Mellin parameter c must be finite");
  validate_shape({t_max, values_.size()});
  require_finite(values_, "spectrum");
}

double Spectrum::dt() const { return 2.0 * t_max_ / static_cast<double>(values_.size() - 1); }

double Spectrum::t(std::size_t j) const {
  const auto half = static_cast<std::ptrdiff_t>((values_.size() - 1) / 2);
  const auto offset = static_cast<std::ptrdiff_t>(j) - half;
  if (offset == half) return t_max_;
  if (offset == -half) return -t_max_;
  return static_cast<double>(offset) * dt();
}

std::vector<double> Spectrum::t_points() const {
  std::vector<double> out(values_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = t(j);
  return out;
}

std::vector<double> trapezoid_weights(std::size_t n, double step) {
  std::vector<double> w(n, step);
  if (n > 0) {
    w.front() *= 0.5;
    w.back() *= 0.5;
  }
  return w;
}

}  // namespace mellin

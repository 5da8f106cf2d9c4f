#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mellin/function.hpp"

namespace mellin {

/// Log-uniform lattice x_j = exp(u_min + j * du) on the positive half-line.
class GeometricGrid {
 public:
  GeometricGrid(double u_min, double u_max, std::size_t n);

  double u_min() const { return u_min_; }
  double u_max() const { return u_max_; }
  std::size_t size() const { return n_; }
  double du() const { return du_; }

  /// Log-abscissa of point j. The last point is pinned to u_max.
  double u(std::size_t j) const;
  double x(std::size_t j) const;

  std::vector<double> log_points() const;
  std::vector<double> points() const;

  friend bool operator==(const GeometricGrid&, const GeometricGrid&) = default;

 private:
  double u_min_;
  double u_max_;
  std::size_t n_;
  double du_;
};

/// Shape of a symmetric t-grid: m points, odd, spanning [-t_max, t_max].
struct SpectrumShape {
  double t_max;
  std::size_t m;
};

/// Samples of a function on a GeometricGrid with the Mellin parameter c.
class SampledSignal {
 public:
  SampledSignal(GeometricGrid grid, double c, std::vector<Complex> values);

  /// Samples f at the grid points.
  static SampledSignal sample(const EvaluableFunction& f, const GeometricGrid& grid, double c);

  const GeometricGrid& grid() const { return grid_; }
  double c() const { return c_; }
  std::span<const Complex> values() const { return values_; }

  /// h_j = x_j^c f(x_j), the log-substituted samples.
  std::vector<Complex> weighted() const;

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }
  void add_diagnostic(std::string message) { diagnostics_.push_back(std::move(message)); }

 private:
  GeometricGrid grid_;
  double c_;
  std::vector<Complex> values_;
  std::vector<std::string> diagnostics_;
};

/// Values of a Mellin transform on the line s = c + it, t on a symmetric
/// uniform grid with t = 0 at the centre.
class Spectrum {
 public:
  Spectrum(double c, double t_max, std::vector<Complex> values);

  double c() const { return c_; }
  double t_max() const { return t_max_; }
  std::size_t size() const { return values_.size(); }
  SpectrumShape shape() const { return {t_max_, values_.size()}; }
  double dt() const;
  double t(std::size_t j) const;
  std::vector<double> t_points() const;
  std::span<const Complex> values() const { return values_; }

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }
  void add_diagnostic(std::string message) { diagnostics_.push_back(std::move(message)); }

 private:
  double c_;
  double t_max_;
  std::vector<Complex> values_;
  std::vector<std::string> diagnostics_;
};

void validate_shape(const SpectrumShape& shape);

/// Uniform trapezoid weights (1/2 at both ends) scaled by the step.
std::vector<double> trapezoid_weights(std::size_t n, double step);

}  // namespace mellin

#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "mellin/function.hpp"
#include "mellin/grid.hpp"
#include "mellin/kernels.hpp"
#include "mellin/quadrature.hpp"

namespace mellin {

/// Spectral density F on [-T, T]: either a callable or uniform-or-not knots
/// joined by straight lines. Zero outside its support.
class SpectralDensity {
 public:
  using Fn = std::function<Complex(double)>;

  /// F must be defined on [-band_edge, band_edge]; it is never called outside.
  /// Interior breakpoints mark jumps or kinks the quadrature must not straddle.
  static SpectralDensity from_function(double band_edge, Fn density, std::vector<double> interior_breakpoints = {});

  /// Piecewise-linear interpolation of (t_i, v_i); t strictly increasing.
  /// The band edge is max(|t_0|, |t_last|).
  static SpectralDensity from_samples(std::vector<double> t, std::vector<Complex> values);

  double band_edge() const { return band_edge_; }
  bool is_sampled() const { return !knots_t_.empty(); }
  Complex operator()(double t) const;

  /// Interval endpoints the quadrature never straddles.
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  std::span<const double> knot_t() const { return knots_t_; }
  std::span<const Complex> knot_values() const { return knots_v_; }

 private:
  double band_edge_ = 0.0;
  Fn density_;
  std::vector<double> knots_t_;
  std::vector<Complex> knots_v_;
  std::vector<double> breakpoints_;
};

/// Composite Gauss-Legendre rule over the support of F, resolving the
/// oscillation e^{-itu} for |u| <= rate and polynomial weights up to `degree`.
/// Each level doubles the panel count.
quadrature::Rule band_rule(const SpectralDensity& density, double rate, int degree, int level);

/// Mellin-bandlimited signal defined by c and its spectral density:
/// x^c f(x) = (1/2 pi) int_{-T}^{T} F(t) e^{-it log x} dt.
class BandlimitedModel {
 public:
  BandlimitedModel(double c, SpectralDensity density);

  double c() const { return c_; }
  double band_edge() const { return density_->band_edge(); }
  const SpectralDensity& density() const { return *density_; }

  /// Same density, different Mellin parameter.
  BandlimitedModel with_c(double c) const;

  /// x^c (Theta_c^k f)(x) at x = e^u, i.e. (1/2 pi) int (-it)^k F(t) e^{-itu} dt.
  Complex weighted_theta(double u, int k) const;

  /// weighted_theta on a uniform u-lattice through the parallel phase-sum kernel.
  std::vector<Complex> weighted_theta_on_lattice(const kernels::Lattice& lattice, int k) const;

  /// f(x).
  Complex value(double x) const;

  /// f^(0..k)(x), from d^j/dx^j x^{-s} = (-s)(-s-1)...(-s-j+1) x^{-s-j}.
  std::vector<Complex> jet(double x, int k) const;

  /// Evaluation contract with analytic derivatives.
  EvaluableFunction function() const;

  /// log ||Theta_c^r f||_{X^2_c} = (1/2) log((1/2 pi) int t^{2r} |F|^2 dt), accumulated in log space.
  /// -inf for the zero density.
  double log_theta_norm(int r) const;

 private:
  double c_;
  std::shared_ptr<const SpectralDensity> density_;
};

/// f(x) for the model.
Complex synthesize(const BandlimitedModel& model, double x);

/// Samples f on every grid point.
SampledSignal synthesize_on_grid(const BandlimitedModel& model, const GeometricGrid& grid);

}  // namespace mellin

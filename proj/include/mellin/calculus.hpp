#pragma once

#include <vector>

#include "mellin/function.hpp"
#include "mellin/grid.hpp"
#include "mellin/model.hpp"

namespace mellin {

/// Coefficients S_c(r, k), 0 <= k <= r <= r_max, with
/// Theta_c^r f(x) = sum_k S_c(r, k) x^k f^(k)(x).
class StirlingTable {
 public:
  StirlingTable(double c, int r_max);

  double c() const { return c_; }
  int r_max() const { return r_max_; }
  double operator()(int r, int k) const;
  std::vector<double> row(int r) const;

 private:
  double c_;
  int r_max_;
  std::vector<std::vector<double>> rows_;
};

/// Row S_c(r, 0..r). Throws on negative r or when a coefficient overflows.
std::vector<double> stirling_coeffs(int r, double c);

/// x -> h^c f(hx). Analytic derivatives carry over when f has them.
EvaluableFunction mellin_translate(const EvaluableFunction& f, double h, double c);

enum class DerivativePolicy {
  /// analytic derivatives when f has them, otherwise finite differences
  automatic,
  /// throw "derivative unavailable" unless f has analytic derivatives
  analytic_only,
  /// always finite differences in u = log x
  finite_difference,
};

/// Theta_c^r f(x). Analytic route: Stirling expansion over x^k f^(k)(x).
/// Fallback: order-4 central differences of h(u) = e^{cu} f(e^u), since
/// h^(r)(u) = e^{cu} (Theta_c^r f)(e^u).
Complex mellin_derivative(const EvaluableFunction& f, double c, int r, double x,
                          DerivativePolicy policy = DerivativePolicy::automatic);

/// Theta_c^r f sampled on a grid (parallel over points).
SampledSignal mellin_derivative_on_grid(const EvaluableFunction& f, double c, int r, const GeometricGrid& grid,
                                        DerivativePolicy policy = DerivativePolicy::automatic);

/// Theta_c^0 f, ..., Theta_c^{r_max} f on a grid from one jet per point. Needs analytic derivatives.
std::vector<SampledSignal> mellin_derivatives_on_grid(const EvaluableFunction& f, double c, int r_max,
                                                      const GeometricGrid& grid);

/// Central-difference weights of the given accuracy order for the d-th
/// derivative on the stencil -p..p (p = (d+1)/2 + accuracy/2 - 1).
std::vector<double> central_difference_weights(int derivative, int accuracy);

enum class MomentMode {
  log_domain,
  /// plain accumulation of t^{2r} |F|^2; refuses r > 20
  direct,
};

/// ||Theta_c^r f||_{X^2_c} = ((1/2 pi) int t^{2r} |F(t)|^2 dt)^{1/2}, trapezoid over the spectrum grid.
double theta_norm(const Spectrum& spectrum, int r, MomentMode mode = MomentMode::log_domain);

/// Same quantity from the model's spectral density.
double theta_norm(const BandlimitedModel& model, int r, MomentMode mode = MomentMode::log_domain);

/// log ||Theta_c^r f|| from a spectrum, accumulated in log space; -inf for zero spectra.
double log_theta_norm(const Spectrum& spectrum, int r);

/// Relative L^2 gap over the t-grid between M[Theta_c^r f] and (-it)^r M[f].
double derivative_spectrum_gap(const SampledSignal& f, const SampledSignal& theta_f, int r,
                               const SpectrumShape& shape);

/// As above, with Theta_c^r f computed by mellin_derivative on the grid.
double derivative_spectrum_gap(const EvaluableFunction& f, double c, const GeometricGrid& grid, int r,
                               const SpectrumShape& shape);

}  // namespace mellin

#pragma once

#include "mellin/function.hpp"
#include "mellin/grid.hpp"

namespace mellin {

/// h(u) = e^{cu} f(e^u). The result is evaluated at real u, not at x > 0.
EvaluableFunction log_substitute(const EvaluableFunction& f, double c);

/// Mellin transform on the line c + it by the log-domain trapezoid sum
/// du * sum_j h(u_j) e^{i t u_j}. A truncation diagnostic is attached when
/// |h| at either grid end exceeds Defaults::truncation_threshold of its peak.
Spectrum mellin_forward(const SampledSignal& signal, const SpectrumShape& shape);

/// f(x_j) = x_j^{-c} / (2 pi) * trapezoid sum of F(t) x_j^{-it} over the t-grid.
SampledSignal mellin_inverse(const Spectrum& spectrum, const GeometricGrid& grid);

/// (int |f(u)|^2 u^{2c-1} du)^{1/2} as (du * trapezoid sum |h_j|^2)^{1/2}.
double x2c_norm(const SampledSignal& signal);

/// du * trapezoid sum |h_j|; bounds every forward value.
double xc_norm(const SampledSignal& signal);

/// L^2 norm of the spectrum over its t-grid (trapezoid).
double spectrum_l2_norm(const Spectrum& spectrum);

/// | ||f||_{X^2_c} - (2 pi)^{-1/2} ||M f||_{L^2} | / ||f||_{X^2_c}.
double plancherel_gap(const SampledSignal& signal, const SpectrumShape& shape);

/// Relative L^2 (trapezoid in u, weighted by x^c) distance between two signals on the same grid.
double relative_l2_error(const SampledSignal& approx, const SampledSignal& exact);

}  // namespace mellin

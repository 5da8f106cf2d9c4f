#pragma once

#include <string>
#include <vector>

#include "mellin/model.hpp"

namespace mellin::corpus {

struct Entry {
  std::string name;
  BandlimitedModel model;
};

/// Spectral window e^{-a s^2} (1 - s^2)^N, s = t/T: vanishes to order N at
/// the band edge, so h(u) = x^c f(x) is concentrated near u = 0 and decays
/// below 1e-8 of its peak by |u| = 80 for every T used here.
SpectralDensity window_density(double T, int N, double a, double tilt = 0.0, double shift = 0.0);

/// F = (1 + tilt * t/T) e^{i shift t} on [-T, T], jumps at both edges.
SpectralDensity box_density(double T, double tilt = 0.0, double shift = 0.0);

/// The transform corpus: smooth-edged windows, T in {1, pi, 2pi}, c in {-1, 0, 1/2, 1}.
std::vector<Entry> smooth_models();

/// Box-edged spectra, where the ratio estimator converges as 1 - 1/(2r).
std::vector<Entry> edge_models();

/// lin_c as a model: F = 1 on [-pi, pi].
BandlimitedModel lin_model(double c);

/// F = 1 on [-2, -1] U [1, 2].
BandlimitedModel two_interval_model(double c);

/// F = 1 on [T - eps, T].
BandlimitedModel narrow_band_model(double T, double eps, double c);

/// Box spectrum with band T = 0.8 pi sigma; samples decay like 1/k.
BandlimitedModel sampling_model(double sigma, double c);

/// Smooth window with band T = 0.8 pi sigma.
BandlimitedModel smooth_sampling_model(double sigma, double c);

/// Looks up any named model above; throws ValidationError for unknown names.
BandlimitedModel by_name(const std::string& name);

std::vector<std::string> names();

}  // namespace mellin::corpus

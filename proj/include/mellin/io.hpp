#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mellin/bandlimited.hpp"
#include "mellin/grid.hpp"
#include "mellin/model.hpp"
#include "mellin/paley_wiener.hpp"

namespace mellin::io {

/// Shortest decimal form with 17 significant digits; identical input gives identical text.
std::string format_number(double v);

/// JSON sidecar of a signal CSV: c and the grid.
struct SignalMeta {
  double c = 0.0;
  double u_min = 0.0;
  double u_max = 0.0;
  std::size_t n = 0;

  GeometricGrid grid() const { return {u_min, u_max, n}; }
  friend bool operator==(const SignalMeta&, const SignalMeta&) = default;
};

SignalMeta meta_of(const SampledSignal& signal);

void write_meta(std::ostream& out, const SignalMeta& meta);
SignalMeta read_meta(std::istream& in);

/// Header `x,re,im`, x increasing.
void write_signal_csv(std::ostream& out, const SampledSignal& signal);
/// Rows must match the grid in `meta` point for point.
SampledSignal read_signal_csv(std::istream& in, const SignalMeta& meta);

/// Header `t,re,im`.
void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);
/// The t column must be a symmetric uniform grid with an odd number of rows.
Spectrum read_spectrum_csv(std::istream& in, double c);

/// Knots `t,re,im` of a piecewise-linear density.
SpectralDensity read_density_csv(std::istream& in);
/// Density values on m uniform points over [-T, T].
void write_density_csv(std::ostream& out, const SpectralDensity& density, std::size_t m);

/// `{ "c", "sigma", "K", "samples": [[re, im], ...] }`, k = -K..K.
void write_samples_json(std::ostream& out, const ExpSampleSet& samples);
ExpSampleSet read_samples_json(std::istream& in);

/// `{ "method", "T_hat", "stabilized_at", "per_order": [{"r", "root", "ratio"}, ...], "warnings" }`.
void write_bandwidth_json(std::ostream& out, const BandwidthEstimate& estimate);
BandwidthEstimate read_bandwidth_json(std::istream& in);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace mellin::io

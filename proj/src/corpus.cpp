#include "mellin/corpus.hpp"

#include <cmath>
#include <numbers>

#include "mellin/error.hpp"

namespace mellin::corpus {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

SpectralDensity window_density(double T, int N, double a, double tilt, double shift) {
  return SpectralDensity::from_function(T, [=](double t) {
    const double s = t / T;
    const double body = std::exp(-a * s * s) * std::pow(1.0 - s * s, N) * (1.0 + tilt * s);
    return body * std::polar(1.0, shift * t);
  });
}

SpectralDensity box_density(double T, double tilt, double shift) {
  return SpectralDensity::from_function(T, [=](double t) { return (1.0 + tilt * t / T) * std::polar(1.0, shift * t); });
}

std::vector<Entry> smooth_models() {
  return {
      {"window-T1-c0", BandlimitedModel(0.0, window_density(1.0, 6, 1.0))},
      {"window-T1-c0.5-tilt", BandlimitedModel(0.5, window_density(1.0, 6, 1.0, 0.3))},
      {"window-Tpi-c-1-shift", BandlimitedModel(-1.0, window_density(kPi, 6, 1.0, 0.0, 0.5))},
      {"window-Tpi-c0.5-tilt", BandlimitedModel(0.5, window_density(kPi, 6, 1.0, -0.4))},
      {"window-T2pi-c1", BandlimitedModel(1.0, window_density(2.0 * kPi, 6, 1.0))},
      {"window-T2pi-c0-shift", BandlimitedModel(0.0, window_density(2.0 * kPi, 6, 1.0, 0.4, -0.75))},
  };
}

std::vector<Entry> edge_models() {
  return {
      {"box-T1-c0-tilt", BandlimitedModel(0.0, box_density(1.0, 0.5))},
      {"lin-c0", lin_model(0.0)},
      {"box-Tpi-c-1-shift", BandlimitedModel(-1.0, box_density(kPi, 0.0, 1.5))},
      {"box-T2pi-c1", BandlimitedModel(1.0, box_density(2.0 * kPi, -0.3))},
      {"box-T2pi-c0.5-shift", BandlimitedModel(0.5, box_density(2.0 * kPi, 0.2, -2.0))},
  };
}

BandlimitedModel lin_model(double c) { return BandlimitedModel(c, box_density(kPi)); }

BandlimitedModel two_interval_model(double c) {
  return BandlimitedModel(
      c, SpectralDensity::from_function(
             2.0, [](double t) { return Complex(std::abs(t) >= 1.0 ? 1.0 : 0.0, 0.0); }, {-1.0, 1.0}));
}

BandlimitedModel narrow_band_model(double T, double eps, double c) {
  if (!(eps > 0.0 && eps < T)) throw ValidationError("narrow band needs 0 < eps < T");
  return BandlimitedModel(
      c, SpectralDensity::from_function(
             T, [=](double t) { return Complex(t >= T - eps ? 1.0 : 0.0, 0.0); }, {T - eps}));
}

BandlimitedModel sampling_model(double sigma, double c) {
  return BandlimitedModel(c, box_density(0.8 * kPi * sigma, 0.25, 0.3));
}

BandlimitedModel smooth_sampling_model(double sigma, double c) {
  return BandlimitedModel(c, window_density(0.8 * kPi * sigma, 6, 1.0, 0.2, 0.3));
}

BandlimitedModel by_name(const std::string& name) {
  for (auto& e : smooth_models()) {
    if (e.name == name) return e.model;
  }
  for (auto& e : edge_models()) {
    if (e.name == name) return e.model;
  }
  if (name == "two-interval") return two_interval_model(0.0);
  if (name == "sampling-box") return sampling_model(1.0, 0.0);
  if (name == "sampling-window") return smooth_sampling_model(1.0, 0.0);
  std::string known;
  for (const auto& n : names()) known += (known.empty() ? "" : ", ") + n;
  throw ValidationError("unknown corpus model '" + name + "' (known: " + known + ")");
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (auto& e : smooth_models()) out.push_back(e.name);
  for (auto& e : edge_models()) out.push_back(e.name);
  out.insert(out.end(), {"two-interval", "sampling-box", "sampling-window"});
  return out;
}

}  // namespace mellin::corpus

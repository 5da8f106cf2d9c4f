#include "mellin/paley_wiener.hpp"

#include <cmath>
#include <cstdio>

#include "mellin/calculus.hpp"
#include "mellin/error.hpp"

namespace mellin {

namespace {

// relative change of rho between the last two orders above which the estimate is flagged
constexpr double kStabilityTolerance = 0.01;

}  // namespace

double bernstein_ratio(const BandlimitedModel& model, int r) {
  if (r < 0) throw ValidationError("derivative order must be nonnegative");
  const double log0 = model.log_theta_norm(0);
  if (std::isinf(log0)) throw NumericalError("zero norm");
  if (r == 0) return 1.0;
  const double logr = model.log_theta_norm(r);
  return std::exp(logr - log0 - r * std::log(model.band_edge()));
}

BandwidthEstimate estimate_bandwidth_from_log_norms(const std::vector<double>& log_norms) {
  const int r_max = static_cast<int>(log_norms.size()) - 1;
  if (r_max < 4) throw ValidationError("r_max must be at least 4");
  for (double v : log_norms) {
    if (std::isinf(v) && v < 0.0) throw NumericalError("zero function");
    if (!std::isfinite(v)) throw NumericalError("non-finite spectral moment");
  }
  BandwidthEstimate est;
  for (int r = 1; r <= r_max; ++r) {
    BandwidthOrder order{r, std::exp(log_norms[static_cast<std::size_t>(r)] / r), std::nullopt};
    if (r < r_max) {
      order.ratio = std::exp(log_norms[static_cast<std::size_t>(r) + 1] - log_norms[static_cast<std::size_t>(r)]);
    }
    est.per_order.push_back(order);
  }
  const auto& last = est.per_order[static_cast<std::size_t>(r_max - 2)];
  const auto& before = est.per_order[static_cast<std::size_t>(r_max - 3)];
  est.T_hat = *last.ratio;
  est.stabilized_at = last.r;
  const double change = std::abs(*last.ratio - *before.ratio) / *last.ratio;
  if (change > kStabilityTolerance) {
    char msg[160];
    std::snprintf(msg, sizeof msg, "ratio estimate still changing by %.2f%% at r_max=%d", 100.0 * change, r_max);
    est.warnings.emplace_back(msg);
  }
  return est;
}

BandwidthEstimate estimate_bandwidth(const Spectrum& spectrum, int r_max) {
  if (r_max < 4) throw ValidationError("r_max must be at least 4");
  std::vector<double> logs(static_cast<std::size_t>(r_max) + 1);
  for (int r = 0; r <= r_max; ++r) logs[static_cast<std::size_t>(r)] = log_theta_norm(spectrum, r);
  return estimate_bandwidth_from_log_norms(logs);
}

BandwidthEstimate estimate_bandwidth(const BandlimitedModel& model, int r_max) {
  if (r_max < 4) throw ValidationError("r_max must be at least 4");
  std::vector<double> logs(static_cast<std::size_t>(r_max) + 1);
  for (int r = 0; r <= r_max; ++r) logs[static_cast<std::size_t>(r)] = model.log_theta_norm(r);
  return estimate_bandwidth_from_log_norms(logs);
}

std::vector<double> boundary_decay_probe(const BandlimitedModel& model, int k, const std::vector<double>& probe_xs) {
  if (k < 0) throw ValidationError("derivative order must be nonnegative");
  if (probe_xs.empty()) throw ValidationError("probe set is empty");
  for (std::size_t i = 0; i < probe_xs.size(); ++i) {
    if (!(probe_xs[i] > 0.0) || !std::isfinite(probe_xs[i])) throw ValidationError("probe points must be positive");
    if (i > 0 && !(probe_xs[i] > probe_xs[i - 1])) throw ValidationError("probe points must be sorted");
  }
  if (probe_xs.front() > 1e-6 || probe_xs.back() < 1e6) {
    throw ValidationError("probe points must span at least [1e-6, 1e6]");
  }
  std::vector<double> out(probe_xs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(model.weighted_theta(std::log(probe_xs[i]), k));
  return out;
}

}  // namespace mellin

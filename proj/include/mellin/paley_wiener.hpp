#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mellin/grid.hpp"
#include "mellin/model.hpp"

namespace mellin {

/// ||Theta_c^r f|| / (T^r ||f||), computed from spectral moments in log space.
double bernstein_ratio(const BandlimitedModel& model, int r);

struct BandwidthOrder {
  int r;
  /// ||Theta^r f||^{1/r}
  double root;
  /// ||Theta^{r+1} f|| / ||Theta^r f||; absent for r = r_max
  std::optional<double> ratio;
};

struct BandwidthEstimate {
  std::string method = "ratio";
  double T_hat = 0.0;
  /// order whose ratio is reported as T_hat (r_max - 1)
  int stabilized_at = 0;
  std::vector<BandwidthOrder> per_order;
  std::vector<std::string> warnings;
};

/// Root and ratio sequences for r = 1..r_max from log-domain moments; T_hat = rho_{r_max - 1}.
BandwidthEstimate estimate_bandwidth(const Spectrum& spectrum, int r_max);
BandwidthEstimate estimate_bandwidth(const BandlimitedModel& model, int r_max);

/// From precomputed log ||Theta^r f||, r = 0..r_max.
BandwidthEstimate estimate_bandwidth_from_log_norms(const std::vector<double>& log_norms);

/// |x^c Theta_c^k f(x)| at each probe point, via the spectral representation.
/// Probes must be positive, sorted and span at least [1e-6, 1e6].
std::vector<double> boundary_decay_probe(const BandlimitedModel& model, int k, const std::vector<double>& probe_xs);

}  // namespace mellin

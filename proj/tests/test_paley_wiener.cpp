#include <gtest/gtest.h>

#include <cmath>

#include "mellin/config.hpp"
#include "mellin/corpus.hpp"
#include "mellin/error.hpp"
#include "mellin/paley_wiener.hpp"
#include "mellin/transform.hpp"
#include "oracle.hpp"

using mellin::BandlimitedModel;
using mellin::SpectralDensity;

namespace {

std::vector<double> standard_probes() {
  std::vector<double> xs;
  for (int j = -20; j <= 20; ++j) xs.push_back(std::exp(static_cast<double>(j)));
  return xs;
}

}  // namespace

TEST(Bernstein, OrderZeroIsOne) {
  for (const auto& e : mellin::corpus::smooth_models()) EXPECT_EQ(mellin::bernstein_ratio(e.model, 0), 1.0);
}

TEST(Bernstein, LinFirstOrder) {
  // int_{-pi}^{pi} t^2 dt / (2 pi) = pi^2 / 3
  EXPECT_NEAR(mellin::bernstein_ratio(mellin::corpus::lin_model(0.0), 1), 1.0 / std::sqrt(3.0), 1e-13);
}

TEST(Bernstein, NeverExceedsOne) {
  auto all = mellin::corpus::smooth_models();
  for (auto& e : mellin::corpus::edge_models()) all.push_back(e);
  for (const auto& e : all) {
    for (int r = 0; r <= 30; ++r) EXPECT_LE(mellin::bernstein_ratio(e.model, r), 1.0 + 1e-8) << e.name << " r=" << r;
  }
}

TEST(Bernstein, NarrowBandIsNearlySharp) {
  EXPECT_NEAR(mellin::bernstein_ratio(mellin::corpus::narrow_band_model(1.0, 1e-3, 0.0), 20), oracle::sharpness_r20, 1e-10);
  EXPECT_GE(mellin::bernstein_ratio(mellin::corpus::narrow_band_model(oracle::kPi, 1e-3 * oracle::kPi, 0.5), 20), 0.98);
}

TEST(Bernstein, ZeroModelThrows) {
  const BandlimitedModel zero(0.0, SpectralDensity::from_function(1.0, [](double) { return mellin::Complex(0.0); }));
  EXPECT_THROW(mellin::bernstein_ratio(zero, 3), mellin::NumericalError);
  EXPECT_THROW(mellin::bernstein_ratio(mellin::corpus::lin_model(0.0), -1), mellin::ValidationError);
}

TEST(Estimate, LinClosedForms) {
  const auto est = mellin::estimate_bandwidth(mellin::corpus::lin_model(0.0), 30);
  ASSERT_EQ(est.per_order.size(), 30u);
  EXPECT_NEAR(est.per_order[9].root, oracle::lin0_root_r10, 1e-9);
  EXPECT_NEAR(est.per_order[29].root, oracle::lin0_root_r30, 1e-9);
  EXPECT_NEAR(*est.per_order[0].ratio, oracle::lin0_ratio_r1, 1e-9);
  EXPECT_NEAR(*est.per_order[9].ratio, oracle::lin0_ratio_r10, 1e-9);
  EXPECT_NEAR(*est.per_order[28].ratio, oracle::lin0_ratio_r29, 1e-9);
  EXPECT_FALSE(est.per_order[29].ratio.has_value());
  EXPECT_EQ(est.T_hat, *est.per_order[28].ratio);
  EXPECT_EQ(est.stabilized_at, 29);
  EXPECT_EQ(est.method, "ratio");
  EXPECT_NEAR(est.T_hat, oracle::kPi, 0.02 * oracle::kPi);
}

TEST(Estimate, TwoIntervalsReportTheOuterEdge) {
  const auto est = mellin::estimate_bandwidth(mellin::corpus::two_interval_model(0.0), 30);
  EXPECT_NEAR(est.T_hat, oracle::two_interval_ratio_r29, 1e-9);
  EXPECT_NEAR(est.T_hat, 2.0, 0.1);
}

TEST(Estimate, EdgeCorpusWithinFivePercent) {
  for (const auto& e : mellin::corpus::edge_models()) {
    const auto est = mellin::estimate_bandwidth(e.model, mellin::Defaults::r_max);
    EXPECT_NEAR(est.T_hat / e.model.band_edge(), 1.0, 0.05) << e.name;
  }
}

TEST(Estimate, SmoothWindowsUnderestimate) {
  // A density vanishing like (1 - s^2)^N at the edge pulls the ratio sequence below T at r = 30.
  const auto e = mellin::corpus::smooth_models().front();
  const auto est = mellin::estimate_bandwidth(e.model, 30);
  EXPECT_LT(est.T_hat, 0.9 * e.model.band_edge());
  EXPECT_LT(est.T_hat, e.model.band_edge());
}

TEST(Estimate, SpectrumPathMatchesModelPath) {
  const auto model = mellin::corpus::lin_model(0.0);
  const auto grid = mellin::reference_grid();
  // t-window on the band: the Gibbs ripple outside [-pi, pi] would dominate the high moments
  const auto spectrum = mellin::mellin_forward(mellin::synthesize_on_grid(model, grid), {oracle::kPi, 4097});
  const auto from_spectrum = mellin::estimate_bandwidth(spectrum, 30);
  EXPECT_NEAR(from_spectrum.T_hat, oracle::kPi, 0.02 * oracle::kPi);
}

TEST(Estimate, Validation) {
  EXPECT_THROW(mellin::estimate_bandwidth(mellin::corpus::lin_model(0.0), 3), mellin::ValidationError);
  const BandlimitedModel zero(0.0, SpectralDensity::from_function(1.0, [](double) { return mellin::Complex(0.0); }));
  try {
    mellin::estimate_bandwidth(zero, 10);
    FAIL();
  } catch (const mellin::NumericalError& e) {
    EXPECT_STREQ(e.what(), "zero function");
  }
}

TEST(Estimate, UnsettledSequenceWarns) {
  const auto est = mellin::estimate_bandwidth(mellin::corpus::lin_model(0.0), 4);
  EXPECT_FALSE(est.warnings.empty());
  EXPECT_TRUE(mellin::estimate_bandwidth(mellin::corpus::lin_model(0.0), 30).warnings.empty());
}

TEST(Estimate, RootsAreInvariantUnderLogShift) {
  const auto base = mellin::corpus::edge_models()[2].model;
  std::vector<double> interior;
  for (double b : base.density().breakpoints()) {
    if (std::abs(b) < base.band_edge()) interior.push_back(b);
  }
  const auto shifted = BandlimitedModel(base.c(), SpectralDensity::from_function(base.band_edge(), [base](double t) {
                                          return base.density()(t) * std::polar(1.0, 2.5 * t);
                                        }, interior));
  const auto a = mellin::estimate_bandwidth(base, 30);
  const auto b = mellin::estimate_bandwidth(shifted, 30);
  for (int r = 0; r < 30; ++r) EXPECT_NEAR(a.per_order[r].root / b.per_order[r].root, 1.0, 1e-10) << r;
}

TEST(Estimate, RootsScaleWithBand) {
  const auto a = mellin::estimate_bandwidth(BandlimitedModel(0.0, mellin::corpus::box_density(1.0)), 20);
  const auto b = mellin::estimate_bandwidth(BandlimitedModel(0.0, mellin::corpus::box_density(3.0)), 20);
  // ||Theta^r f|| scales like T^{r + 1/2}
  for (int r = 1; r <= 20; ++r) {
    EXPECT_NEAR(b.per_order[r - 1].root / a.per_order[r - 1].root, std::pow(3.0, 1.0 + 0.5 / r), 1e-10) << r;
  }
  EXPECT_NEAR(b.T_hat / a.T_hat, 3.0, 1e-10);
}

TEST(Estimate, NormalizedRootsNondecreasing) {
  auto all = mellin::corpus::smooth_models();
  for (auto& e : mellin::corpus::edge_models()) all.push_back(e);
  for (const auto& e : all) {
    const double log0 = e.model.log_theta_norm(0);
    double prev = 0.0;
    for (int r = 1; r <= 30; ++r) {
      const double root = std::exp((e.model.log_theta_norm(r) - log0) / r);
      EXPECT_GE(root, prev * (1.0 - 1e-12)) << e.name << " r=" << r;
      prev = root;
    }
  }
}

TEST(Estimate, FromLogNorms) {
  // geometric sequence: every ratio equals e
  std::vector<double> logs;
  for (int r = 0; r <= 6; ++r) logs.push_back(static_cast<double>(r));
  const auto est = mellin::estimate_bandwidth_from_log_norms(logs);
  EXPECT_NEAR(est.T_hat, std::exp(1.0), 1e-15);
  logs[3] = std::nan("");
  EXPECT_THROW(mellin::estimate_bandwidth_from_log_norms(logs), mellin::NumericalError);
}

TEST(BoundaryProbe, LinDecaysAtTheEnds) {
  const auto xs = standard_probes();
  const auto p = mellin::boundary_decay_probe(mellin::corpus::lin_model(0.0), 0, xs);
  ASSERT_EQ(p.size(), xs.size());
  EXPECT_LE(p.front(), 1.0 / (20.0 * oracle::kPi) + 1e-14);
  EXPECT_LE(p.back(), 1.0 / (20.0 * oracle::kPi) + 1e-14);
  EXPECT_NEAR(p[20], 1.0, 1e-12);
  // |sinc| envelope 1/(pi |u|)
  for (std::size_t j = 21; j < xs.size(); ++j) EXPECT_LE(p[j], 1.0 / (oracle::kPi * std::log(xs[j])) + 1e-12);
}

TEST(BoundaryProbe, SmoothCorpusIsSmallAtTheEnds) {
  const auto xs = standard_probes();
  for (const auto& e : mellin::corpus::smooth_models()) {
    for (int k = 0; k <= 3; ++k) {
      const auto p = mellin::boundary_decay_probe(e.model, k, xs);
      double peak = 0.0;
      for (double v : p) peak = std::max(peak, v);
      EXPECT_LT(std::max(p.front(), p.back()), 1e-2 * peak) << e.name << " k=" << k;
    }
  }
}

TEST(BoundaryProbe, Validation) {
  const auto model = mellin::corpus::lin_model(0.0);
  EXPECT_THROW(mellin::boundary_decay_probe(model, 0, {}), mellin::ValidationError);
  EXPECT_THROW(mellin::boundary_decay_probe(model, 0, {1e-7, 1.0, 1e7, 1e3}), mellin::ValidationError);
  EXPECT_THROW(mellin::boundary_decay_probe(model, 0, {-1.0, 1e7}), mellin::ValidationError);
  EXPECT_THROW(mellin::boundary_decay_probe(model, 0, {1e-3, 1e7}), mellin::ValidationError);
  EXPECT_THROW(mellin::boundary_decay_probe(model, -1, {1e-7, 1e7}), mellin::ValidationError);
}

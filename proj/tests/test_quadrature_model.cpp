#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "mellin/corpus.hpp"
#include "mellin/error.hpp"
#include "mellin/model.hpp"
#include "mellin/quadrature.hpp"
#include "oracle.hpp"

using mellin::BandlimitedModel;
using mellin::Complex;
using mellin::SpectralDensity;
using mellin::ValidationError;
namespace q = mellin::quadrature;

TEST(GaussLegendre, ExactForPolynomialsOfDegree2nMinus1) {
  for (int n : {1, 2, 5, 12, 32, 64}) {
    const auto& rule = q::gauss_legendre(n);
    ASSERT_EQ(rule.nodes.size(), static_cast<std::size_t>(n));
    for (int p = 0; p <= 2 * n - 1; p += 1) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], p);
      const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
      EXPECT_NEAR(sum, exact, 1e-14) << "n=" << n << " p=" << p;
    }
  }
}

TEST(GaussLegendre, RejectsUnsupportedOrders) {
  EXPECT_THROW(q::gauss_legendre(0), ValidationError);
  EXPECT_THROW(q::gauss_legendre(q::kMaxGaussOrder + 1), ValidationError);
}

TEST(GaussLegendre, PanelsComposeOnAnInterval) {
  q::Rule rule;
  q::append_panel(rule, 0.0, 1.0, 8);
  q::append_panel(rule, 1.0, 3.0, 8);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::exp(rule.nodes[i]);
  EXPECT_NEAR(sum, std::exp(3.0) - 1.0, 1e-13);
}

TEST(LogSumExp, StableAndSkipsMinusInfinity) {
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> big{1000.0, 1000.0, -inf};
  EXPECT_NEAR(q::log_sum_exp(big), 1000.0 + std::log(2.0), 1e-12);
  const std::vector<double> small{std::log(2.0), std::log(3.0)};
  EXPECT_NEAR(q::log_sum_exp(small), std::log(5.0), 1e-15);
  const std::vector<double> none{-inf, -inf};
  EXPECT_EQ(q::log_sum_exp(none), -inf);
  EXPECT_EQ(q::log_sum_exp(std::vector<double>{}), -inf);
}

TEST(SpectralDensity, SampledDensityIsPiecewiseLinear) {
  const auto d = SpectralDensity::from_samples({-1.0, 0.0, 2.0}, {Complex(0.0), Complex(2.0, 1.0), Complex(0.0)});
  EXPECT_EQ(d.band_edge(), 2.0);
  EXPECT_EQ(d(-0.5), Complex(1.0, 0.5));
  EXPECT_EQ(d(1.0), Complex(1.0, 0.5));
  EXPECT_EQ(d(-1.5), Complex(0.0));
  EXPECT_EQ(d(2.5), Complex(0.0));
  EXPECT_TRUE(d.is_sampled());
}

TEST(SpectralDensity, RejectsMalformedKnots) {
  EXPECT_THROW(SpectralDensity::from_samples({0.0, 0.0, 1.0}, std::vector<Complex>(3)), ValidationError);
  EXPECT_THROW(SpectralDensity::from_samples({0.0, 1.0}, std::vector<Complex>(3)), ValidationError);
  EXPECT_THROW(SpectralDensity::from_samples({0.0}, std::vector<Complex>(1)), ValidationError);
  EXPECT_THROW(SpectralDensity::from_samples({0.0, 1.0}, {Complex(std::nan("")), Complex(0.0)}), ValidationError);
  EXPECT_THROW(SpectralDensity::from_function(-1.0, [](double) { return Complex(1.0); }), ValidationError);
  EXPECT_THROW(SpectralDensity::from_function(1.0, [](double) { return Complex(1.0); }, {1.5}), ValidationError);
}

TEST(SpectralDensity, CallableIsNeverEvaluatedOutsideBand) {
  const auto d = SpectralDensity::from_function(1.0, [](double t) {
    if (std::abs(t) > 1.0) throw std::logic_error("outside");
    return Complex(1.0);
  });
  EXPECT_EQ(d(3.0), Complex(0.0));
  EXPECT_NO_THROW(mellin::synthesize(BandlimitedModel(0.0, d), 2.0));
}

TEST(Synthesize, BoxDensityClosedForm) {
  const BandlimitedModel model(0.5, mellin::corpus::box_density(2.0));
  EXPECT_NEAR(mellin::synthesize(model, std::exp(1.0)).real(), oracle::box_T2_c_half_at_e, 1e-15);
  for (double u : {-30.0, -2.0, 0.0, 0.4, 7.5, 60.0}) {
    const Complex f = mellin::synthesize(model, std::exp(u));
    const double exact = std::exp(-0.5 * u) * oracle::box_weighted(2.0, u);
    EXPECT_NEAR(f.real(), exact, 1e-12 * std::exp(-0.5 * u) / 3.0) << u;
    EXPECT_NEAR(f.imag(), 0.0, 1e-12 * std::exp(-0.5 * u)) << u;
  }
}

TEST(Synthesize, PiBoxIsLinKernel) {
  for (double c : {-1.0, 0.0, 0.5}) {
    const auto model = mellin::corpus::lin_model(c);
    for (double u : {-5.5, -1.0, 0.0, 0.25, 3.7}) {
      const double x = std::exp(u);
      EXPECT_NEAR(mellin::synthesize(model, x).real(), std::exp(-c * u) * oracle::box_weighted(oracle::kPi, u), 1e-12 * std::exp(-c * u));
    }
  }
}

TEST(Synthesize, ZeroDensityGivesZero) {
  const BandlimitedModel model(0.0, SpectralDensity::from_samples({-1.0, 1.0}, {Complex(0.0), Complex(0.0)}));
  EXPECT_EQ(mellin::synthesize(model, 3.0), Complex(0.0));
  EXPECT_EQ(model.log_theta_norm(3), -std::numeric_limits<double>::infinity());
}

TEST(Synthesize, TriangleFromKnots) {
  const double T = 2.5;
  const BandlimitedModel model(0.0, SpectralDensity::from_samples({-T, 0.0, T}, {Complex(0.0), Complex(1.0), Complex(0.0)}));
  for (double u : {-9.0, -0.3, 1.1, 20.0}) {
    const double exact = (1.0 - std::cos(T * u)) / (oracle::kPi * T * u * u);
    EXPECT_NEAR(mellin::synthesize(model, std::exp(u)).real(), exact, 1e-13) << u;
  }
}

TEST(Model, JetMatchesClosedFormDerivatives) {
  const double T = 2.0, c = 0.3;
  const BandlimitedModel model(c, mellin::corpus::box_density(T));
  for (double u : {-1.3, 0.7, 2.2}) {
    const double x = std::exp(u);
    const double s = std::sin(T * u) / (oracle::kPi * u);
    const double s1 = (T * u * std::cos(T * u) - std::sin(T * u)) / (oracle::kPi * u * u);
    const double s2 = (-T * T * u * u * std::sin(T * u) - 2.0 * (T * u * std::cos(T * u) - std::sin(T * u))) /
                      (oracle::kPi * u * u * u);
    const double e = std::exp(-c * u);
    const double g1 = e * (s1 - c * s);
    const double g2 = e * (s2 - 2.0 * c * s1 + c * c * s);
    const auto jet = model.jet(x, 2);
    EXPECT_NEAR(jet[0].real(), e * s, 1e-13);
    EXPECT_NEAR(jet[1].real(), g1 / x, 1e-12 / x);
    EXPECT_NEAR(jet[2].real(), (g2 - g1) / (x * x), 1e-12 / (x * x));
  }
}

TEST(Model, LatticeAgreesWithScalarEvaluation) {
  const auto model = mellin::corpus::smooth_models()[3].model;
  const mellin::kernels::Lattice lat{-20.0, 0.37, 111};
  for (int k : {0, 1, 3}) {
    const auto values = model.weighted_theta_on_lattice(lat, k);
    for (std::size_t j = 0; j < lat.count; ++j) {
      const Complex scalar = model.weighted_theta(lat.at(j), k);
      EXPECT_LT(std::abs(values[j] - scalar), 1e-12 * std::max(1.0, std::abs(scalar))) << k << " " << j;
    }
  }
}

TEST(Model, LogMomentsOfPiBoxAreClosedForm) {
  const auto model = mellin::corpus::lin_model(0.0);
  for (int r = 0; r <= 60; ++r) {
    // ||Theta^r lin_0||^2 = pi^{2r} / (2r + 1)
    const double exact = r * std::log(oracle::kPi) - 0.5 * std::log(2.0 * r + 1.0);
    EXPECT_NEAR(model.log_theta_norm(r), exact, 1e-13 * std::max(1.0, std::abs(exact))) << r;
  }
}

TEST(Model, WithCKeepsDensity) {
  const auto model = mellin::corpus::lin_model(0.0).with_c(1.0);
  EXPECT_EQ(model.c(), 1.0);
  EXPECT_NEAR(mellin::synthesize(model, std::exp(0.5)).real(), oracle::lin1_at_sqrt_e, 1e-14);
}

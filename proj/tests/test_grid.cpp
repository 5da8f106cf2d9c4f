#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "mellin/config.hpp"
#include "mellin/error.hpp"
#include "mellin/grid.hpp"

using mellin::Complex;
using mellin::GeometricGrid;
using mellin::SampledSignal;
using mellin::Spectrum;
using mellin::ValidationError;

TEST(GeometricGrid, EndpointsAndSpacing) {
  const GeometricGrid g(-3.0, 5.0, 9);
  EXPECT_EQ(g.du(), 1.0);
  EXPECT_EQ(g.u(0), -3.0);
  EXPECT_EQ(g.u(8), 5.0);
  EXPECT_EQ(g.x(3), std::exp(0.0));
  EXPECT_EQ(g.points().size(), 9u);
}

TEST(GeometricGrid, LogSpacingUniformAtReferenceResolution) {
  const auto g = mellin::reference_grid();
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t j = 0; j + 1 < g.size(); ++j) {
    ASSERT_GT(g.x(j + 1), g.x(j));
    const double step = std::log(g.x(j + 1)) - std::log(g.x(j));
    ASSERT_NEAR(step, g.du(), 4.0 * eps * (1.0 + std::abs(g.u(j + 1)))) << j;
  }
}

TEST(GeometricGrid, LastPointPinnedToUpperEnd) {
  const GeometricGrid g(-0.1, 0.7, 7);
  EXPECT_EQ(g.u(6), 0.7);
  EXPECT_EQ(g.log_points().back(), 0.7);
}

TEST(GeometricGrid, RejectsBadShapes) {
  EXPECT_THROW(GeometricGrid(0.0, 1.0, 1), ValidationError);
  EXPECT_THROW(GeometricGrid(1.0, 1.0, 10), ValidationError);
  EXPECT_THROW(GeometricGrid(2.0, 1.0, 10), ValidationError);
  EXPECT_THROW(GeometricGrid(-800.0, 1.0, 10), ValidationError);
  EXPECT_THROW(GeometricGrid(0.0, std::numeric_limits<double>::infinity(), 10), ValidationError);
}

TEST(SampledSignal, ValidatesLengthAndFiniteness) {
  const GeometricGrid g(0.0, 1.0, 4);
  EXPECT_THROW(SampledSignal(g, 0.0, std::vector<Complex>(3)), ValidationError);
  std::vector<Complex> v(4);
  v[2] = Complex(std::nan(""), 0.0);
  EXPECT_THROW(SampledSignal(g, 0.0, v), ValidationError);
  v[2] = Complex(0.0, std::numeric_limits<double>::infinity());
  EXPECT_THROW(SampledSignal(g, 0.0, v), ValidationError);
  EXPECT_THROW(SampledSignal(g, std::nan(""), std::vector<Complex>(4)), ValidationError);
}

TEST(SampledSignal, WeightedValuesCancelPowerLaw) {
  const GeometricGrid g(-4.0, 4.0, 33);
  const double c = 0.75;
  const auto s = SampledSignal::sample(mellin::EvaluableFunction([c](double x) { return Complex(std::pow(x, -c)); }), g, c);
  for (const auto& h : s.weighted()) EXPECT_NEAR(h.real(), 1.0, 1e-14);
}

TEST(Spectrum, SymmetricGridThroughZero) {
  const Spectrum s(0.5, 2.0, std::vector<Complex>(9));
  EXPECT_EQ(s.dt(), 0.5);
  EXPECT_EQ(s.t(4), 0.0);
  EXPECT_EQ(s.t(0), -2.0);
  EXPECT_EQ(s.t(8), 2.0);
  for (std::size_t j = 0; j < 9; ++j) EXPECT_EQ(s.t(j), -s.t(8 - j));
}

TEST(Spectrum, RejectsEvenCountsAndBadValues) {
  EXPECT_THROW(Spectrum(0.0, 1.0, std::vector<Complex>(4)), ValidationError);
  EXPECT_THROW(Spectrum(0.0, 1.0, std::vector<Complex>(1)), ValidationError);
  EXPECT_THROW(Spectrum(0.0, -1.0, std::vector<Complex>(5)), ValidationError);
  std::vector<Complex> v(5);
  v[0] = Complex(std::nan(""), 0.0);
  EXPECT_THROW(Spectrum(0.0, 1.0, v), ValidationError);
}

TEST(TrapezoidWeights, HalfWeightsAtEnds) {
  const auto w = mellin::trapezoid_weights(4, 0.5);
  EXPECT_EQ(w[0], 0.25);
  EXPECT_EQ(w[1], 0.5);
  EXPECT_EQ(w[3], 0.25);
}

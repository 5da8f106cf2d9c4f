#include "mellin/bandlimited.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <utility>

#include "mellin/config.hpp"
#include "mellin/error.hpp"

namespace mellin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// integrand at the window ends above this fraction of its peak triggers a warning
constexpr double kWindowWarn = 1e-9;

void check_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ValidationError("sampling rate sigma must be positive");
}

struct KernelLattice {
  int count;
  double step;
};

KernelLattice kernel_lattice(double sigma, const KernelQuadrature& quad) {
  if (!(quad.v_min < quad.v_max) || !(quad.step_sigma > 0.0)) throw ValidationError("bad kernel quadrature window");
  const double step = quad.step_sigma / sigma;
  // even number of intervals so the half-step comparison uses every other node
  long intervals = static_cast<long>(std::ceil((quad.v_max - quad.v_min) / step));
  if (intervals % 2 != 0) ++intervals;
  if (intervals < 4) intervals = 4;
  return {static_cast<int>(intervals + 1), step};
}

// integrand values g_j = f(e^{v_j}) lin_{c/sigma}(e^{sigma (u - v_j)}) on the lattice, already multiplied by sigma
KernelResult integrate_kernel(std::span<const Complex> integrand, double step, double sigma) {
  const std::size_t n = integrand.size();
  Complex fine{};
  Complex coarse{};
  double magnitude = 0.0;
  double peak = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double edge = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
    fine += edge * integrand[j];
    if (j % 2 == 0) coarse += edge * integrand[j];
    magnitude += std::abs(integrand[j]);
    peak = std::max(peak, std::abs(integrand[j]));
  }
  fine *= step;
  coarse *= 2.0 * step;

  // envelope over the last 2/sigma of each end, times the distance scale of a 1/v^2 tail
  const auto span = static_cast<std::size_t>(std::max(2.0, std::ceil(2.0 / (sigma * step))));
  double left = 0.0;
  double right = 0.0;
  for (std::size_t j = 0; j < std::min(span, n); ++j) {
    left = std::max(left, std::abs(integrand[j]));
    right = std::max(right, std::abs(integrand[n - 1 - j]));
  }
  const double reach = 0.5 * static_cast<double>(n - 1) * step;
  const double tail = (left + right) * std::max(1.0 / sigma, reach);

  KernelResult result{fine, std::abs(fine - coarse) + tail + 16.0 * kEps * magnitude * step, {}};
  // the lattice can land on kernel zeros at the very ends, so the envelope is used
  if (peak > 0.0 && std::max(left, right) > kWindowWarn * peak) {
    char msg[160];
    std::snprintf(msg, sizeof msg, "kernel window: integrand near the window ends reaches %.3g of its peak",
                  std::max(left, right) / peak);
    result.warnings.emplace_back(msg);
  }
  return result;
}

}  // namespace

double sinc(double v) {
  if (std::abs(v) < 1e-6) {
    const double z = kPi * v;
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  const double k = std::nearbyint(v);
  const double frac = v - k;
  double s = std::sin(kPi * frac);
  if (std::fmod(k, 2.0) != 0.0) s = -s;
  return s / (kPi * v);
}

double lin_log(double c, double v) { return std::exp(-c * v) * sinc(v); }

double lin(double c, double x) {
  if (!(x > 0.0)) throw ValidationError("lin_c needs x > 0");
  return lin_log(c, std::log(x));
}

ExpSampleSet::ExpSampleSet(double c, double sigma, int K, std::vector<Complex> samples)
    : c_(c), sigma_(sigma), K_(K), samples_(std::move(samples)) {
  check_sigma(sigma);
  if (K < 1) throw ValidationError("truncation radius K must be positive");
  if (samples_.size() != static_cast<std::size_t>(2 * K + 1)) {
    throw ValidationError("expected " + std::to_string(2 * K + 1) + " samples, got " + std::to_string(samples_.size()));
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i].real()) || !std::isfinite(samples_[i].imag())) {
      throw ValidationError("non-finite sample at k=" + std::to_string(static_cast<int>(i) - K));
    }
  }
}

Complex ExpSampleSet::at(int k) const {
  if (k < -K_ || k > K_) throw ValidationError("sample index outside -K..K");
  return samples_[static_cast<std::size_t>(k + K_)];
}

ExpSampleSet exp_sample(const EvaluableFunction& f, double c, double sigma, int K) {
  check_sigma(sigma);
  if (K < 1) throw ValidationError("truncation radius K must be positive");
  std::vector<Complex> samples(static_cast<std::size_t>(2 * K + 1));
  for (int k = -K; k <= K; ++k) {
    Complex v;
    try {
      v = f(std::exp(k / sigma));
    } catch (const std::exception& e) {
      throw NumericalError("sampling failed at k=" + std::to_string(k) + ": " + e.what());
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericalError("sampling produced a non-finite value at k=" + std::to_string(k));
    }
    samples[static_cast<std::size_t>(k + K)] = v;
  }
  return ExpSampleSet(c, sigma, K, std::move(samples));
}

ExpSampleSet exp_sample(const BandlimitedModel& model, double sigma, int K) {
  check_sigma(sigma);
  if (K < 1) throw ValidationError("truncation radius K must be positive");
  const kernels::Lattice lattice{-K / sigma, 1.0 / sigma, static_cast<std::size_t>(2 * K + 1)};
  auto h = model.weighted_theta_on_lattice(lattice, 0);
  for (int k = -K; k <= K; ++k) {
    h[static_cast<std::size_t>(k + K)] *= std::exp(-model.c() * (k / sigma));
  }
  return ExpSampleSet(model.c(), sigma, K, std::move(h));
}

bool sampling_is_adequate(double band_edge, double sigma) { return band_edge <= kPi * sigma; }

Reconstruction exp_reconstruct(const ExpSampleSet& samples, double x) {
  if (!(x > 0.0)) throw ValidationError("reconstruction point must be positive");
  const double sigma = samples.sigma();
  const double cs = samples.c() / sigma;
  const int K = samples.K();
  const double s = sigma * std::log(x);

  const double node = std::nearbyint(s);
  if (std::abs(s - node) <= 8.0 * kEps * std::max(1.0, std::abs(s)) && std::abs(node) <= K) {
    return {samples.at(static_cast<int>(node)), 0.0, K};
  }

  auto term = [&](int k) { return samples.at(k) * lin_log(cs, s - k); };
  Complex acc{};
  double magnitude = 0.0;
  for (int k = K; k >= 1; --k) {
    const Complex plus = term(k);
    const Complex minus = term(-k);
    acc += plus + minus;
    magnitude += std::abs(plus) + std::abs(minus);
  }
  const Complex centre = term(0);
  acc += centre;
  magnitude += std::abs(centre);

  // weighted end samples g_{+-K} = e^{c k/sigma} f(e^{k/sigma}); tail modelled as |g_k| <= |g_K| K/|k|
  const double u = std::log(x);
  const double gK = std::abs(samples.at(K)) * std::exp(samples.c() * (K / sigma - u));
  const double gmK = std::abs(samples.at(-K)) * std::exp(samples.c() * (-K / sigma - u));
  const double tail = (gK + gmK) * K / (kPi * std::max(1.0, K - std::abs(s)));
  return {acc, tail + 16.0 * kEps * magnitude, K};
}

KernelQuadrature default_kernel_quadrature() {
  return {Defaults::kernel_v_min, Defaults::kernel_v_max, Defaults::kernel_step_sigma};
}

KernelResult kernel_apply(const EvaluableFunction& f, double c, double sigma, double x, const KernelQuadrature& quad) {
  check_sigma(sigma);
  if (!(x > 0.0)) throw ValidationError("x must be positive");
  const auto lat = kernel_lattice(sigma, quad);
  const double u = std::log(x);
  const double cs = c / sigma;
  std::vector<Complex> integrand(static_cast<std::size_t>(lat.count));
  for (int j = 0; j < lat.count; ++j) {
    const double v = quad.v_min + j * lat.step;
    integrand[static_cast<std::size_t>(j)] = sigma * f(std::exp(v)) * lin_log(cs, sigma * (u - v));
  }
  return integrate_kernel(integrand, lat.step, sigma);
}

KernelResult kernel_apply(const BandlimitedModel& model, double sigma, double x, const KernelQuadrature& quad) {
  check_sigma(sigma);
  if (!(x > 0.0)) throw ValidationError("x must be positive");
  const auto lat = kernel_lattice(sigma, quad);
  const double u = std::log(x);
  const auto h = model.weighted_theta_on_lattice(
      kernels::Lattice{quad.v_min, lat.step, static_cast<std::size_t>(lat.count)}, 0);
  // f(e^v) lin_{c/sigma}(e^{sigma(u-v)}) = e^{-cu} h(v) sinc(sigma (u - v))
  const double scale = sigma * std::exp(-model.c() * u);
  std::vector<Complex> integrand(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    const double v = quad.v_min + static_cast<double>(j) * lat.step;
    integrand[j] = scale * h[j] * sinc(sigma * (u - v));
  }
  return integrate_kernel(integrand, lat.step, sigma);
}

}  // namespace mellin

#include "mellin/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "mellin/error.hpp"

namespace mellin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxLevel = 10;
// Convergence: successive levels agree to this fraction of max(|I|, int |integrand|).
constexpr double kQuadTolerance = 1e-12;
// Largest phase swept by one panel.
constexpr double kPanelPhase = 4.0;

Complex minus_i_pow(double t, int k) {
  Complex p{1.0, 0.0};
  const Complex factor{0.0, -t};
  for (int j = 0; j < k; ++j) p *= factor;
  return p;
}

int nodes_for(double phase, int degree, bool smooth_density) {
  int n = phase < 0.5 ? 6 : (phase < 2.0 ? 9 : 12);
  if (smooth_density) n = std::max(n, 12);
  n = std::max(n, degree / 2 + 2);
  return std::min(n, quadrature::kMaxGaussOrder);
}

bool converged(Complex now, Complex before, double scale) {
  return std::abs(now - before) <= kQuadTolerance * std::max(std::abs(now), scale);
}

}  // namespace

SpectralDensity SpectralDensity::from_function(double band_edge, Fn density, std::vector<double> interior_breakpoints) {
  if (!(band_edge > 0.0) || !std::isfinite(band_edge)) throw ValidationError("band edge T must be positive");
  if (!density) throw ValidationError("spectral density callable is empty");
  SpectralDensity d;
  d.band_edge_ = band_edge;
  d.density_ = std::move(density);
  std::sort(interior_breakpoints.begin(), interior_breakpoints.end());
  d.breakpoints_.push_back(-band_edge);
  for (double b : interior_breakpoints) {
    if (!(b > d.breakpoints_.back() && b < band_edge)) throw ValidationError("interior breakpoints must lie inside (-T, T)");
    d.breakpoints_.push_back(b);
  }
  d.breakpoints_.push_back(band_edge);
  return d;
}

SpectralDensity SpectralDensity::from_samples(std::vector<double> t, std::vector<Complex> values) {
  if (t.size() != values.size()) throw ValidationError("spectral density: t and value counts differ");
  if (t.size() < 2) throw ValidationError("spectral density needs at least 2 knots");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(t[i])) throw ValidationError("spectral density: non-finite t at knot " + std::to_string(i));
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
      throw ValidationError("spectral density: non-finite value at knot " + std::to_string(i));
    }
    if (i > 0 && !(t[i] > t[i - 1])) throw ValidationError("spectral density: t must be strictly increasing");
  }
  SpectralDensity d;
  d.band_edge_ = std::max(std::abs(t.front()), std::abs(t.back()));
  if (!(d.band_edge_ > 0.0)) throw ValidationError("band edge T must be positive");
  d.breakpoints_ = t;
  d.knots_t_ = std::move(t);
  d.knots_v_ = std::move(values);
  return d;
}

Complex SpectralDensity::operator()(double t) const {
  if (!is_sampled()) {
    if (t < -band_edge_ || t > band_edge_) return {0.0, 0.0};
    return density_(t);
  }
  if (t < knots_t_.front() || t > knots_t_.back()) return {0.0, 0.0};
  auto it = std::upper_bound(knots_t_.begin(), knots_t_.end(), t);
  if (it == knots_t_.end()) return knots_v_.back();
  const auto hi = static_cast<std::size_t>(it - knots_t_.begin());
  const std::size_t lo = hi - 1;
  const double frac = (t - knots_t_[lo]) / (knots_t_[hi] - knots_t_[lo]);
  return knots_v_[lo] + frac * (knots_v_[hi] - knots_v_[lo]);
}

quadrature::Rule band_rule(const SpectralDensity& density, double rate, int degree, int level) {
  const auto& bp = density.breakpoints();
  const bool smooth = !density.is_sampled();
  const double span = 2.0 * density.band_edge();
  const long scale = 1L << level;
  quadrature::Rule rule;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const double a = bp[i];
    const double b = bp[i + 1];
    const double len = b - a;
    long panels = static_cast<long>(std::ceil(len * rate / kPanelPhase));
    if (smooth) panels = std::max(panels, static_cast<long>(std::ceil(32.0 * len / span)));
    panels = std::max(panels, 1L) * scale;
    const double width = len / static_cast<double>(panels);
    const int n = nodes_for(width * rate, degree + (smooth ? 0 : 1), smooth);
    for (long p = 0; p < panels; ++p) {
      const double lo = a + width * static_cast<double>(p);
      const double hi = (p + 1 == panels) ? b : a + width * static_cast<double>(p + 1);
      quadrature::append_panel(rule, lo, hi, n);
    }
  }
  return rule;
}

BandlimitedModel::BandlimitedModel(double c, SpectralDensity density)
    : c_(c), density_(std::make_shared<const SpectralDensity>(std::move(density))) {
  if (!std::isfinite(c)) throw ValidationError("Mellin parameter c must be finite");
}

BandlimitedModel BandlimitedModel::with_c(double c) const {
  BandlimitedModel copy = *this;
  if (!std::isfinite(c)) throw ValidationError("Mellin parameter c must be finite");
  copy.c_ = c;
  return copy;
}

Complex BandlimitedModel::weighted_theta(double u, int k) const {
  if (k < 0) throw ValidationError("derivative order must be nonnegative");
  Complex previous{};
  for (int level = 0; level <= kMaxLevel; ++level) {
    const auto rule = band_rule(*density_, std::abs(u), k, level);
    Complex acc{};
    double scale = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = rule.nodes[i];
      const Complex term = rule.weights[i] * (*density_)(t) * minus_i_pow(t, k);
      acc += term * std::polar(1.0, -t * u);
      scale += std::abs(term);
    }
    acc /= kTwoPi;
    scale /= kTwoPi;
    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag())) {
      throw NumericalError("synthesize: non-finite spectral density");
    }
    if (level > 0 && converged(acc, previous, scale)) return acc;
    previous = acc;
  }
  throw NumericalError("synthesize: quadrature did not converge");
}

std::vector<Complex> BandlimitedModel::weighted_theta_on_lattice(const kernels::Lattice& lattice, int k) const {
  if (k < 0) throw ValidationError("derivative order must be nonnegative");
  if (lattice.count == 0) return {};
  const double rate = std::max(std::abs(lattice.y0), std::abs(lattice.at(lattice.count - 1)));
  std::vector<Complex> previous;
  for (int level = 0; level <= kMaxLevel; ++level) {
    const auto rule = band_rule(*density_, rate, k, level);
    std::vector<Complex> coeffs(rule.nodes.size());
    double scale = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const double t = rule.nodes[i];
      coeffs[i] = rule.weights[i] * (*density_)(t) * minus_i_pow(t, k) / kTwoPi;
      if (!std::isfinite(coeffs[i].real()) || !std::isfinite(coeffs[i].imag())) {
        throw NumericalError("synthesize: non-finite spectral density");
      }
      scale += std::abs(coeffs[i]);
    }
    std::vector<Complex> current(lattice.count);
    kernels::phase_sum(rule.nodes, coeffs, lattice, -1.0, current);
    if (level > 0) {
      bool ok = true;
      for (std::size_t j = 0; j < current.size() && ok; ++j) ok = converged(current[j], previous[j], scale);
      if (ok) return current;
    }
    previous = std::move(current);
  }
  throw NumericalError("synthesize: quadrature did not converge on lattice");
}

Complex BandlimitedModel::value(double x) const {
  if (!(x > 0.0)) throw ValidationError("x must be positive");
  const double u = std::log(x);
  return std::exp(-c_ * u) * weighted_theta(u, 0);
}

std::vector<Complex> BandlimitedModel::jet(double x, int k) const {
  if (!(x > 0.0)) throw ValidationError("x must be positive");
  if (k < 0) throw ValidationError("derivative order must be nonnegative");
  const double u = std::log(x);
  const auto orders = static_cast<std::size_t>(k) + 1;
  std::vector<Complex> previous(orders);
  for (int level = 0; level <= kMaxLevel; ++level) {
    const auto rule = band_rule(*density_, std::abs(u), k, level);
    std::vector<Complex> acc(orders);
    std::vector<double> scale(orders, 0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = rule.nodes[i];
      const Complex s{c_, t};
      Complex poly{1.0, 0.0};
      const Complex base = rule.weights[i] * (*density_)(t);
      const Complex phase = std::polar(1.0, -t * u);
      for (std::size_t j = 0; j < orders; ++j) {
        const Complex term = base * poly;
        acc[j] += term * phase;
        scale[j] += std::abs(term);
        poly *= -s - static_cast<double>(j);
      }
    }
    bool ok = level > 0;
    for (std::size_t j = 0; j < orders; ++j) {
      acc[j] /= kTwoPi;
      scale[j] /= kTwoPi;
      if (ok) ok = converged(acc[j], previous[j], scale[j]);
    }
    if (ok) {
      for (std::size_t j = 0; j < orders; ++j) acc[j] *= std::exp(-(c_ + static_cast<double>(j)) * u);
      return acc;
    }
    previous = std::move(acc);
  }
  throw NumericalError("derivative quadrature did not converge");
}

EvaluableFunction BandlimitedModel::function() const {
  return EvaluableFunction::with_jet([m = *this](double x) { return m.value(x); },
                                     [m = *this](double x, int k) { return m.jet(x, k); });
}

double BandlimitedModel::log_theta_norm(int r) const {
  if (r < 0) throw ValidationError("derivative order must be nonnegative");
  double previous = 0.0;
  for (int level = 0; level <= kMaxLevel; ++level) {
    const auto rule = band_rule(*density_, 0.0, 2 * r + 2, level);
    std::vector<double> terms(rule.nodes.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const double t = rule.nodes[i];
      const double mag = std::abs((*density_)(t));
      if (mag == 0.0 || (r > 0 && t == 0.0)) {
        terms[i] = -std::numeric_limits<double>::infinity();
        continue;
      }
      terms[i] = std::log(rule.weights[i]) + 2.0 * std::log(mag) + (r > 0 ? 2.0 * r * std::log(std::abs(t)) : 0.0);
    }
    const double current = 0.5 * (quadrature::log_sum_exp(terms) - std::log(kTwoPi));
    if (std::isinf(current)) return current;
    if (level > 0 && std::abs(current - previous) <= 1e-14 * std::max(1.0, std::abs(current))) return current;
    previous = current;
  }
  throw NumericalError("spectral moment quadrature did not converge");
}

Complex synthesize(const BandlimitedModel& model, double x) { return model.value(x); }

SampledSignal synthesize_on_grid(const BandlimitedModel& model, const GeometricGrid& grid) {
  auto h = model.weighted_theta_on_lattice(kernels::Lattice{grid.u_min(), grid.du(), grid.size()}, 0);
  for (std::size_t j = 0; j < h.size(); ++j) h[j] *= std::exp(-model.c() * grid.u(j));
  return SampledSignal(grid, model.c(), std::move(h));
}

}  // namespace mellin

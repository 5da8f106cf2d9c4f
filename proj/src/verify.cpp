#include "mellin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "mellin/bandlimited.hpp"
#include "mellin/calculus.hpp"
#include "mellin/config.hpp"
#include "mellin/corpus.hpp"
#include "mellin/paley_wiener.hpp"
#include "mellin/transform.hpp"

namespace mellin::verify {

namespace {

__extension__ typedef __int128 wide;

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Off-node evaluation points, given as log x.
constexpr double kTestLogs[] = {0.37, -1.73, 2.51, 5.29, -7.43, 11.11};

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome at_most(double value, double limit) { return {value <= limit, "max " + sci(value) + " (limit " + sci(limit) + ")"}; }

Outcome at_least(double value, double limit) { return {value >= limit, "min " + sci(value) + " (limit " + sci(limit) + ")"}; }

std::vector<corpus::Entry> all_models() {
  auto all = corpus::smooth_models();
  for (auto& e : corpus::edge_models()) all.push_back(std::move(e));
  return all;
}

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

// max over the test points of |exp_reconstruct - synthesize|, and the rounding scale of the sums.
std::pair<double, double> reconstruction_error(const BandlimitedModel& model, double sigma, int K) {
  const auto samples = exp_sample(model, sigma, K);
  double err = 0.0;
  double mass = 0.0;
  for (const auto& s : samples.samples()) mass += std::abs(s);
  for (double u : kTestLogs) {
    const double x = std::exp(u);
    err = std::max(err, std::abs(exp_reconstruct(samples, x).value - synthesize(model, x)));
  }
  return {err, 16.0 * kEps * mass};
}

class Suite {
 public:
  explicit Suite(const std::function<void(const CheckResult&)>& progress) : progress_(progress) {}

  template <class Fn>
  void check(const char* module, const char* name, Fn&& fn) {
    CheckResult r{module, name, false, {}};
    try {
      Outcome o = fn();
      r.pass = o.pass;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    if (progress_) progress_(r);
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  const std::function<void(const CheckResult&)>& progress_;
  std::vector<CheckResult> results_;
};

void core_checks(Suite& s) {
  const auto grid = reference_grid();
  const auto shape = reference_shape();

  s.check("mellin_core", "grid log spacing uniform to rounding", [&] {
    double worst = 0.0;
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
      const double step = std::log(grid.x(j + 1)) - std::log(grid.x(j));
      const double scale = 4.0 * kEps * (1.0 + std::abs(grid.u(j + 1)));
      worst = std::max(worst, std::abs(step - grid.du()) / scale);
      if (!(grid.x(j + 1) > grid.x(j))) return Outcome{false, "points not increasing at j=" + std::to_string(j)};
    }
    return at_most(worst, 1.0);
  });

  s.check("mellin_core", "forward of exp(-x) at c=1/2, t=0 equals Gamma(1/2)", [&] {
    const auto f = SampledSignal::sample(EvaluableFunction([](double x) { return Complex(std::exp(-x)); }), grid, 0.5);
    const auto F = mellin_forward(f, shape);
    return at_most(std::abs(F.values()[F.size() / 2] - std::sqrt(kPi)) / std::sqrt(kPi), 1e-8);
  });

  s.check("mellin_core", "linearity of the forward transform", [&] {
    const auto models = corpus::smooth_models();
    const auto f = synthesize_on_grid(models[0].model, grid);
    const auto g = synthesize_on_grid(models[1].model.with_c(models[0].model.c()), grid);
    const Complex a(0.7, -1.3), b(-2.1, 0.4);
    std::vector<Complex> mix(grid.size());
    for (std::size_t j = 0; j < mix.size(); ++j) mix[j] = a * f.values()[j] + b * g.values()[j];
    const auto Fm = mellin_forward(SampledSignal(grid, f.c(), mix), shape);
    const auto Ff = mellin_forward(f, shape);
    const auto Fg = mellin_forward(g, shape);
    double diff = 0.0;
    for (std::size_t j = 0; j < Fm.size(); ++j) {
      diff = std::max(diff, std::abs(Fm.values()[j] - (a * Ff.values()[j] + b * Fg.values()[j])));
    }
    return at_most(diff / max_abs(Fm.values()), 1e-13);
  });

  s.check("mellin_core", "forward values bounded by the X_c norm", [&] {
    double worst = 0.0;
    for (const auto& e : corpus::smooth_models()) {
      const auto f = synthesize_on_grid(e.model, grid);
      worst = std::max(worst, max_abs(mellin_forward(f, shape).values()) / xc_norm(f));
    }
    return at_most(worst, 1.0 + 1e-12);
  });

  s.check("mellin_core", "Plancherel gap on the smooth corpus", [&] {
    double worst = 0.0;
    for (const auto& e : corpus::smooth_models()) worst = std::max(worst, plancherel_gap(synthesize_on_grid(e.model, grid), shape));
    return at_most(worst, 1e-6);
  });

  s.check("mellin_core", "inverse after forward reproduces the smooth corpus", [&] {
    double worst = 0.0;
    for (const auto& e : corpus::smooth_models()) {
      const auto f = synthesize_on_grid(e.model, grid);
      worst = std::max(worst, relative_l2_error(mellin_inverse(mellin_forward(f, shape), grid), f));
    }
    return at_most(worst, 1e-6);
  });

  s.check("mellin_core", "grid refinement never raises round-trip error beyond 1.5x", [&] {
    // Errors already at rounding level may fluctuate; 1e-13 is that level for these sums.
    const GeometricGrid fine(2.0 * grid.u_min(), 2.0 * grid.u_max(), 4 * (grid.size() - 1) + 1);
    double worst = 0.0;
    for (const auto& e : corpus::smooth_models()) {
      double err[2];
      int i = 0;
      for (const auto* g : {&grid, &fine}) {
        const auto f = synthesize_on_grid(e.model, *g);
        err[i++] = relative_l2_error(mellin_inverse(mellin_forward(f, shape), *g), f);
      }
      worst = std::max(worst, err[1] / (1.5 * err[0] + 1e-13));
    }
    return at_most(worst, 1.0);
  });
}

void calculus_checks(Suite& s) {
  const auto grid = reference_grid();
  const auto shape = reference_shape();

  s.check("mellin_calculus", "Stirling boundary rows and recursion", [&] {
    for (double c : {-10.0, -1.0, 0.0, 0.5, 1.0, 2.5, 10.0}) {
      const StirlingTable table(c, 64);
      // S(r, 0) = c^r by repeated multiplication, which std::pow need not reproduce bit for bit
      double power = 1.0;
      for (int r = 0; r <= 64; ++r, power *= c) {
        if (table(r, r) != 1.0 || table(r, 0) != power) {
          return Outcome{false, "boundary row fails at c=" + sci(c) + " r=" + std::to_string(r)};
        }
        if (r == 0) continue;
        for (int k = 1; k < r; ++k) {
          if (table(r, k) != table(r - 1, k - 1) + (k + c) * table(r - 1, k)) {
            return Outcome{false, "recursion fails at c=" + sci(c) + " r=" + std::to_string(r)};
          }
        }
      }
    }
    return Outcome{true, "c in [-10, 10], r <= 64"};
  });

  s.check("mellin_calculus", "Stirling rows at c=0 are Stirling numbers of the second kind", [&] {
    // k! S(n, k) = sum_j (-1)^j C(k, j) (k - j)^n, exact in 128-bit integers for n <= 20.
    for (int n = 1; n <= 20; ++n) {
      const auto row = stirling_coeffs(n, 0.0);
      for (int k = 1; k <= n; ++k) {
        wide sum = 0, binom = 1, fact = 1;
        for (int j = 0; j <= k; ++j) {
          wide p = 1;
          for (int e = 0; e < n; ++e) p *= (k - j);
          sum += (j % 2 ? -1 : 1) * binom * p;
          binom = binom * (k - j) / (j + 1);
        }
        for (int i = 2; i <= k; ++i) fact *= i;
        if (row[k] != static_cast<double>(sum / fact)) return Outcome{false, "mismatch at n=" + std::to_string(n)};
      }
    }
    return Outcome{true, "n <= 20"};
  });

  s.check("mellin_calculus", "Stirling expansion equals iterated Theta on x^a sums", [&] {
    std::mt19937_64 rng(20241016);
    std::uniform_real_distribution<double> U(-2.0, 2.0), X(0.2, 5.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const double c = U(rng), x = X(rng);
      const double a[3] = {U(rng), U(rng), U(rng)}, w[3] = {U(rng), U(rng), U(rng)};
      const auto f = EvaluableFunction::with_derivative(
          [=](double y) { return Complex(w[0] * std::pow(y, a[0]) + w[1] * std::pow(y, a[1]) + w[2] * std::pow(y, a[2])); },
          [=](double y, int k) {
            double total = 0.0;
            for (int i = 0; i < 3; ++i) {
              double fall = 1.0;
              for (int j = 0; j < k; ++j) fall *= a[i] - j;
              total += w[i] * fall * std::pow(y, a[i] - k);
            }
            return Complex(total);
          });
      for (int r = 0; r <= 8; ++r) {
        // rounding is measured against the expansion's own terms S_c(r, k) a(a-1)...(a-k+1) x^a,
        // since the sum cancels to nearly nothing when a + c is close to 0
        const auto row = stirling_coeffs(r, c);
        double exact = 0.0, scale = 0.0;
        for (int i = 0; i < 3; ++i) {
          exact += w[i] * std::pow(a[i] + c, r) * std::pow(x, a[i]);
          double fall = 1.0;
          for (int k = 0; k <= r; ++k) {
            scale += std::abs(w[i] * row[static_cast<std::size_t>(k)] * fall) * std::pow(x, a[i]);
            fall *= a[i] - k;
          }
        }
        const Complex got = mellin_derivative(f, c, r, x, DerivativePolicy::analytic_only);
        worst = std::max(worst, std::abs(got - exact) / scale);
      }
    }
    return at_most(worst, 1e-10);
  });

  s.check("mellin_calculus", "eigenfunction law for x^a", [&] {
    for (int a = -2; a <= 2; ++a) {
      const auto f = EvaluableFunction::with_derivative([a](double y) { return Complex(std::pow(y, a)); },
                                                        [a](double y, int k) {
                                                          double fall = 1.0;
                                                          for (int j = 0; j < k; ++j) fall *= a - j;
                                                          return Complex(fall * std::pow(y, a - k));
                                                        });
      for (double c : {-1.0, 0.0, 2.0}) {
        for (double x : {0.5, 2.0, 4.0}) {
          for (int r = 0; r <= 6; ++r) {
            if (mellin_derivative(f, c, r, x) != std::pow(a + c, r) * std::pow(x, a)) {
              return Outcome{false, "a=" + std::to_string(a) + " c=" + sci(c) + " r=" + std::to_string(r)};
            }
          }
        }
      }
    }
    return Outcome{true, "exact for a in -2..2, r <= 6"};
  });

  s.check("mellin_calculus", "Mellin translation quotient converges to Theta at first order", [&] {
    const double c = 0.5, x = 1.7;
    const auto f = EvaluableFunction::with_derivative([](double y) { return Complex(std::exp(-y) * (1.0 + y)); },
                                                      [](double y, int k) {
                                                        if (k == 0) return Complex(std::exp(-y) * (1.0 + y));
                                                        const double sign = k % 2 ? -1.0 : 1.0;
                                                        return Complex(sign * std::exp(-y) * (1.0 + y - k));
                                                      });
    const Complex theta = mellin_derivative(f, c, 1, x);
    double prev = 0.0, worst_ratio = 0.0, last = 0.0;
    for (int k = 3; k <= 6; ++k) {
      const double h = 1.0 + std::pow(10.0, -k);
      const double err = std::abs((mellin_translate(f, h, c)(x) - f(x)) / (h - 1.0) - theta);
      if (k > 3) worst_ratio = std::max(worst_ratio, std::abs(std::log10(prev / err) - 1.0));
      prev = last = err;
    }
    return Outcome{worst_ratio < 0.1 && last < 1e-5, "order deviation " + sci(worst_ratio) + ", error at h-1=1e-6 " + sci(last)};
  });

  s.check("mellin_calculus", "theta_norm at r=0 equals the X^2_c norm", [&] {
    double worst = 0.0;
    for (const auto& e : corpus::smooth_models()) {
      const double x2 = x2c_norm(synthesize_on_grid(e.model, grid));
      worst = std::max(worst, std::abs(theta_norm(e.model, 0) - x2) / x2);
    }
    return at_most(worst, 1e-8);
  });

  s.check("mellin_calculus", "derivative-spectrum identity for r = 1, 2, 3", [&] {
    double worst = 0.0;
    for (const auto& e : corpus::smooth_models()) {
      const auto thetas = mellin_derivatives_on_grid(e.model.function(), e.model.c(), 3, grid);
      for (int r = 1; r <= 3; ++r) worst = std::max(worst, derivative_spectrum_gap(thetas[0], thetas[r], r, shape));
    }
    return at_most(worst, 1e-5);
  });
}

void bandlimited_checks(Suite& s) {
  const auto grid = reference_grid();
  const auto shape = reference_shape();

  s.check("bandlimited", "lin_c(1) = 1 and lin_c(e^m) = 0 for 0 < |m| <= 100", [&] {
    double worst = 0.0;
    for (double c : {-1.0, 0.0, 0.5, 1.0}) {
      if (lin(c, 1.0) != 1.0 || lin_log(c, 0.0) != 1.0) return Outcome{false, "lin_c(1) != 1 at c=" + sci(c)};
      for (int m = -100; m <= 100; ++m) {
        if (m != 0) worst = std::max(worst, std::abs(lin_log(c, m)));
      }
    }
    for (int m = -100; m <= 100; ++m) {
      if (m != 0) worst = std::max(worst, std::abs(lin(0.0, std::exp(m))));
    }
    return at_most(worst, 1e-14);
  });

  s.check("bandlimited", "reconstruction at nodes returns the stored sample", [&] {
    for (const auto& e : all_models()) {
      const double sigma = e.model.band_edge() / (0.8 * kPi);
      const auto samples = exp_sample(e.model, sigma, 64);
      for (int k = -64; k <= 64; ++k) {
        if (exp_reconstruct(samples, std::exp(k / sigma)).value != samples.at(k)) {
          return Outcome{false, e.name + " k=" + std::to_string(k)};
        }
      }
    }
    return Outcome{true, "bit-exact at every node"};
  });

  s.check("bandlimited", "forward of a synthesized model matches F inside the band and vanishes outside", [&] {
    double worst = 0.0;
    for (const auto& e : corpus::smooth_models()) {
      const auto F = mellin_forward(synthesize_on_grid(e.model, grid), shape);
      const double peak = max_abs(F.values());
      for (std::size_t j = 0; j < F.size(); ++j) {
        worst = std::max(worst, std::abs(F.values()[j] - e.model.density()(F.t(j))) / peak);
      }
    }
    return at_most(worst, 1e-6);
  });

  s.check("bandlimited", "off-node error decreases along K = 64..512 for T = 0.8 pi sigma", [&] {
    const auto model = corpus::sampling_model(1.0, 0.0);
    double fmax = 0.0;
    for (double u = -10.0; u <= 10.0; u += 0.01) fmax = std::max(fmax, std::abs(synthesize(model, std::exp(u))));
    double prev = std::numeric_limits<double>::infinity(), err = 0.0;
    for (int K : {64, 128, 256, 512}) {
      err = reconstruction_error(model, 1.0, K).first;
      if (err > 1.5 * prev) return Outcome{false, "error grew at K=" + std::to_string(K)};
      prev = err;
    }
    return at_most(err / fmax, 1e-3);
  });

  s.check("bandlimited", "oversampling by 1.25 does not increase reconstruction error", [&] {
    // lin_0 is excluded: at the critical rate its samples are a single delta and
    // the series is exact, so no oversampled series can do better.
    double worst = 0.0;
    for (const auto& e : all_models()) {
      if (e.name == "lin-c0") continue;
      const double sigma = e.model.band_edge() / kPi;
      const auto [crit, crit_floor] = reconstruction_error(e.model, sigma, 256);
      const auto [over, over_floor] = reconstruction_error(e.model, 1.25 * sigma, 256);
      worst = std::max(worst, over / (crit + crit_floor + over_floor));
    }
    return at_most(worst, 1.0);
  });

  s.check("bandlimited", "kernel_apply matches synthesize", [&] {
    double worst = 0.0;
    for (const auto& e : all_models()) {
      const double sigma = e.model.band_edge() / (0.8 * kPi);
      const double x = std::exp(0.3);
      const Complex exact = synthesize(e.model, x);
      worst = std::max(worst, std::abs(kernel_apply(e.model, sigma, x).value - exact) / std::abs(exact));
    }
    return at_most(worst, 1e-4);
  });

  s.check("bandlimited", "kernel_apply and exp_reconstruct agree within their error estimates", [&] {
    double worst = 0.0;
    for (const auto& e : all_models()) {
      const double sigma = e.model.band_edge() / (0.8 * kPi);
      const auto samples = exp_sample(e.model, sigma, Defaults::sampling_K);
      for (double u : {0.3, -2.2, 4.7}) {
        const auto k = kernel_apply(e.model, sigma, std::exp(u));
        const auto r = exp_reconstruct(samples, std::exp(u));
        worst = std::max(worst, std::abs(k.value - r.value) / (k.error_estimate + r.error_estimate));
      }
    }
    return at_most(worst, 1.0);
  });
}

void paley_wiener_checks(Suite& s) {
  s.check("paley_wiener", "Bernstein ratio at most 1 for r <= 30", [&] {
    double worst = 0.0;
    for (const auto& e : all_models()) {
      for (int r = 0; r <= 30; ++r) worst = std::max(worst, bernstein_ratio(e.model, r));
    }
    return at_most(worst, 1.0 + 1e-8);
  });

  s.check("paley_wiener", "narrow-band family is sharp at r = 20", [&] {
    double best = 0.0;
    for (double T : {1.0, kPi, 2.0 * kPi}) best = std::max(best, bernstein_ratio(corpus::narrow_band_model(T, 1e-3 * T, 0.0), 20));
    return at_least(best, 0.98);
  });

  s.check("paley_wiener", "ratio estimate within 5% of the band edge on box-edged spectra", [&] {
    double worst = 0.0;
    for (const auto& e : corpus::edge_models()) {
      worst = std::max(worst, std::abs(estimate_bandwidth(e.model, Defaults::r_max).T_hat / e.model.band_edge() - 1.0));
    }
    return at_most(worst, 0.05);
  });

  s.check("paley_wiener", "lin_0 root and ratio sequences match closed forms", [&] {
    const auto est = estimate_bandwidth(corpus::lin_model(0.0), Defaults::r_max);
    double worst = 0.0;
    for (const auto& o : est.per_order) {
      const double r = o.r;
      worst = std::max(worst, std::abs(o.root - kPi * std::pow(2 * r + 1, -1.0 / (2 * r))));
      if (o.ratio) worst = std::max(worst, std::abs(*o.ratio - kPi * std::sqrt((2 * r + 1) / (2 * r + 3))));
    }
    return at_most(worst, 1e-6);
  });

  s.check("paley_wiener", "two-interval spectrum is located by its outer edge", [&] {
    return at_most(std::abs(estimate_bandwidth(corpus::two_interval_model(0.0), Defaults::r_max).T_hat / 2.0 - 1.0), 0.05);
  });

  s.check("paley_wiener", "log-shift of the spectrum leaves every root unchanged", [&] {
    double worst = 0.0;
    for (double T : {1.0, kPi, 2.0 * kPi}) {
      const auto plain = estimate_bandwidth(BandlimitedModel(0.0, corpus::box_density(T, 0.3)), Defaults::r_max);
      const auto shifted = estimate_bandwidth(BandlimitedModel(0.0, corpus::box_density(T, 0.3, 1.7)), Defaults::r_max);
      for (std::size_t i = 0; i < plain.per_order.size(); ++i) {
        worst = std::max(worst, std::abs(shifted.per_order[i].root / plain.per_order[i].root - 1.0));
      }
    }
    return at_most(worst, 1e-10);
  });

  s.check("paley_wiener", "normalized roots nondecreasing in r", [&] {
    // (||Theta^r f|| / ||f||)^{1/r} is a power mean of |t| under |F|^2 dt.
    double worst = 0.0;
    for (const auto& e : all_models()) {
      const double log0 = e.model.log_theta_norm(0);
      double prev = 0.0;
      for (int r = 1; r <= Defaults::r_max; ++r) {
        const double root = std::exp((e.model.log_theta_norm(r) - log0) / r);
        worst = std::max(worst, (prev - root) / root);
        prev = root;
      }
    }
    return at_most(worst, 1e-12);
  });

  s.check("paley_wiener", "x^c Theta^k f decays toward 0 and infinity", [&] {
    std::vector<double> xs;
    for (int i = -80; i <= 80; ++i) xs.push_back(std::exp(0.5 * i));
    double worst = 0.0;
    for (const auto& e : corpus::smooth_models()) {
      for (int k = 0; k <= 2; ++k) {
        const auto p = boundary_decay_probe(e.model, k, xs);
        double peak = 0.0, outer = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          peak = std::max(peak, p[i]);
          if (std::abs(std::log(xs[i])) >= 14.0) outer = std::max(outer, p[i]);
        }
        worst = std::max(worst, outer / peak);
      }
    }
    return at_most(worst, 1e-2);
  });
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const std::function<void(const CheckResult&)>& progress) {
  Suite s(progress);
  core_checks(s);
  calculus_checks(s);
  bandlimited_checks(s);
  paley_wiener_checks(s);
  return s.take();
}

}  // namespace mellin::verify

#pragma once

#include <string>
#include <vector>

#include "mellin/function.hpp"
#include "mellin/model.hpp"

namespace mellin {

/// sin(pi v) / (pi v), with the Taylor expansion for |v| < 1e-6 and an exact
/// zero at every nonzero integer.
double sinc(double v);

/// lin_c(x) = x^{-c} sinc(log x); lin_c(1) = 1.
double lin(double c, double x);

/// lin_c at x = e^v, for arguments given in the log domain (exact at integer v).
double lin_log(double c, double v);

/// Samples f(e^{k/sigma}), k = -K..K.
class ExpSampleSet {
 public:
  ExpSampleSet(double c, double sigma, int K, std::vector<Complex> samples);

  double c() const { return c_; }
  double sigma() const { return sigma_; }
  int K() const { return K_; }
  std::span<const Complex> samples() const { return samples_; }

  /// f(e^{k/sigma}) for |k| <= K.
  Complex at(int k) const;

 private:
  double c_;
  double sigma_;
  int K_;
  std::vector<Complex> samples_;
};

ExpSampleSet exp_sample(const EvaluableFunction& f, double c, double sigma, int K);

/// Model samples through the lattice kernel.
ExpSampleSet exp_sample(const BandlimitedModel& model, double sigma, int K);

/// True when T <= pi sigma; otherwise aliasing is expected in reconstructions.
bool sampling_is_adequate(double band_edge, double sigma);

struct Reconstruction {
  Complex value;
  /// truncation estimate for the discarded |k| > K terms plus a rounding floor
  double error_estimate;
  int K;
};

/// Truncated exponential-sampling series sum_k f(e^{k/sigma}) lin_{c/sigma}(e^{-k} x^sigma),
/// accumulated from |k| = K down to 0 with +k and -k paired. At a node
/// e^{j/sigma}, |j| <= K, the stored sample is returned unchanged.
Reconstruction exp_reconstruct(const ExpSampleSet& samples, double x);

struct KernelQuadrature {
  double v_min;
  double v_max;
  /// trapezoid step in v = log y, in units of 1/sigma
  double step_sigma;
};

KernelQuadrature default_kernel_quadrature();

struct KernelResult {
  Complex value;
  /// step-halving difference + window tail + rounding floor
  double error_estimate;
  std::vector<std::string> warnings;
};

/// sigma * int f(y) lin_{c/sigma}((x/y)^sigma) dy/y by the trapezoid rule in v = log y.
KernelResult kernel_apply(const EvaluableFunction& f, double c, double sigma, double x,
                          const KernelQuadrature& quad = default_kernel_quadrature());

/// Same, with model values on the v-lattice from the parallel kernel.
KernelResult kernel_apply(const BandlimitedModel& model, double sigma, double x,
                          const KernelQuadrature& quad = default_kernel_quadrature());

}  // namespace mellin

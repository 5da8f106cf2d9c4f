#include "mellin/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mellin/error.hpp"

namespace mellin::kernels {

namespace {

constexpr std::size_t kBlock = 64;

void check_sizes(std::span<const double> nodes, std::span<const Complex> coeffs, const Lattice& lattice,
                 std::span<Complex> out) {
  if (nodes.size() != coeffs.size()) throw ValidationError("phase_sum: nodes/coeffs size mismatch");
  if (out.size() != lattice.count) throw ValidationError("phase_sum: output size mismatch");
}

}  // namespace

double Lattice::at(std::size_t k) const { return std::fma(static_cast<double>(k), dy, y0); }

void phase_sum(std::span<const double> nodes, std::span<const Complex> coeffs, const Lattice& lattice,
               double sign, std::span<Complex> out) {
  check_sizes(nodes, coeffs, lattice, out);
  const std::size_t n = nodes.size();
  const std::size_t m = lattice.count;
  if (m == 0) return;

  std::vector<double> ar(n), ai(n), rr(n), ri(n);
  for (std::size_t i = 0; i < n; ++i) {
    ar[i] = coeffs[i].real();
    ai[i] = coeffs[i].imag();
    const double step = sign * nodes[i] * lattice.dy;
    rr[i] = std::cos(step);
    ri[i] = std::sin(step);
  }

  const auto blocks = static_cast<std::ptrdiff_t>((m + kBlock - 1) / kBlock);

#pragma omp parallel
  {
    std::vector<double> zr(n), zi(n);
#pragma omp for schedule(static)
    for (std::ptrdiff_t b = 0; b < blocks; ++b) {
      const std::size_t k0 = static_cast<std::size_t>(b) * kBlock;
      const std::size_t k1 = std::min(m, k0 + kBlock);
      const double y = lattice.at(k0);
      for (std::size_t i = 0; i < n; ++i) {
        const double phase = sign * nodes[i] * y;
        zr[i] = std::cos(phase);
        zi[i] = std::sin(phase);
      }
      for (std::size_t k = k0; k < k1; ++k) {
        double sr = 0.0;
        double si = 0.0;
#pragma omp simd reduction(+ : sr, si)
        for (std::size_t i = 0; i < n; ++i) {
          sr += ar[i] * zr[i] - ai[i] * zi[i];
          si += ar[i] * zi[i] + ai[i] * zr[i];
        }
        out[k] = Complex(sr, si);
        if (k + 1 == k1) break;
#pragma omp simd
        for (std::size_t i = 0; i < n; ++i) {
          const double re = zr[i] * rr[i] - zi[i] * ri[i];
          zi[i] = zr[i] * ri[i] + zi[i] * rr[i];
          zr[i] = re;
        }
      }
    }
  }
}

namespace reference {

void phase_sum(std::span<const double> nodes, std::span<const Complex> coeffs, const Lattice& lattice,
               double sign, std::span<Complex> out) {
  check_sizes(nodes, coeffs, lattice, out);
  for (std::size_t k = 0; k < lattice.count; ++k) {
    const double y = lattice.at(k);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double phase = sign * nodes[i] * y;
      acc += coeffs[i] * Complex(std::cos(phase), std::sin(phase));
    }
    out[k] = acc;
  }
}

}  // namespace reference

int apply_thread_cap_from_env() {
  const char* env = std::getenv("MELLIN_KIT_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long cap = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || cap < 1) {
    throw ValidationError(std::string("MELLIN_KIT_THREADS must be a positive integer, got '") + env + "'");
  }
#ifdef _OPENMP
  omp_set_num_threads(static_cast<int>(cap));
#endif
  return static_cast<int>(cap);
}

}  // namespace mellin::kernels

#pragma once

#include <cstddef>
#include <span>

#include "mellin/function.hpp"

namespace mellin::kernels {

/// Uniform evaluation lattice y_k = y0 + k * dy, k = 0..count-1.
struct Lattice {
  double y0;
  double dy;
  std::size_t count;

  double at(std::size_t k) const;
};

/// out[k] = sum_i coeffs[i] * exp(i * sign * nodes[i] * y_k).
///
/// Every transform in the library reduces to this sum. Outputs are split
/// into fixed blocks distributed over OpenMP threads; within a block the
/// phase advances by a per-node rotation that is reseeded with an exact
/// sincos at each block start. Each out[k] is accumulated in the same order
/// whatever the thread count, so results do not depend on the schedule.
void phase_sum(std::span<const double> nodes, std::span<const Complex> coeffs, const Lattice& lattice,
               double sign, std::span<Complex> out);

namespace reference {

/// Serial direct sum with an exact sincos per term. Slow; kept as the
/// semantics the parallel kernel is tested and benchmarked against.
void phase_sum(std::span<const double> nodes, std::span<const Complex> coeffs, const Lattice& lattice,
               double sign, std::span<Complex> out);

}  // namespace reference

/// Caps OpenMP parallelism from MELLIN_KIT_THREADS when set. Returns the cap, or 0.
int apply_thread_cap_from_env();

}  // namespace mellin::kernels

#pragma once

#include <cstddef>
#include <numbers>

#include "mellin/grid.hpp"

namespace mellin {

/// Reference resolutions and numeric defaults shared by the library and the CLI.
struct Defaults {
  // x-domain grid in u = log x
  static constexpr double u_min = -120.0;
  static constexpr double u_max = 120.0;
  static constexpr std::size_t n = 8192;

  // t-grid of forward transforms
  static constexpr double t_max = 4.0 * std::numbers::pi;
  static constexpr std::size_t m = 4097;

  // |h| at the grid ends relative to its peak above which truncation is flagged
  static constexpr double truncation_threshold = 1e-12;

  // exponential sampling truncation radius
  static constexpr int sampling_K = 512;

  // bandwidth estimation
  static constexpr int r_max = 30;

  // finite-difference fallback step in u
  static constexpr double fd_step = 1e-3;

  // reproducing-kernel quadrature window in v = log y and step in units of 1/sigma
  static constexpr double kernel_v_min = -200.0;
  static constexpr double kernel_v_max = 200.0;
  static constexpr double kernel_step_sigma = 0.25;
};

inline GeometricGrid reference_grid() { return {Defaults::u_min, Defaults::u_max, Defaults::n}; }
inline SpectrumShape reference_shape() { return {Defaults::t_max, Defaults::m}; }

}  // namespace mellin

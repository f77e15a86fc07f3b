#pragma once

#include "linklab/common.hpp"

namespace linklab {

/// Square sampling grid shared by fields, screens and pupil masks.
/// Spatial origin sits at pixel (n/2, n/2); spatial frequencies follow
/// FFT ordering (DC at index 0, negative frequencies in the upper half).
struct GridGeometry {
  int n = 0;
  double pitch_m = 0.0;

  GridGeometry() = default;
  GridGeometry(int n_, double pitch_) : n(n_), pitch_m(pitch_) {
    require(is_power_of_two(n), "grid size must be a power of two");
    require(pitch_m > 0.0, "grid pitch must be positive");
  }

  double extent_m() const { return n * pitch_m; }
  double freq_step() const { return 1.0 / extent_m(); }

  // pixel index -> spatial coordinate (m), origin at n/2
  double coord(int i) const { return (i - n / 2) * pitch_m; }

  // pixel index -> spatial frequency (cycles/m), FFT order
  double freq(int i) const {
    int s = (i < n / 2) ? i : i - n;
    return s * freq_step();
  }

  bool operator==(const GridGeometry&) const = default;
};

}  // namespace linklab

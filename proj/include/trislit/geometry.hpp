#pragma once

#include <cstddef>
#include <vector>

namespace trislit {

/// Planar multi-slit layout. Slits sit at transverse positions y_i (meters)
/// in a common plane; the detector moves along the parallel screen axis at
/// distance D. Distances are exact Euclidean lengths, no small-angle
/// approximation anywhere.
class SlitGeometry {
 public:
  /// Positions must be finite and strictly increasing; D and lambda positive.
  SlitGeometry(std::vector<double> slit_positions, double screen_distance,
               double wavelength);

  /// Symmetric three-slit layout {-l, 0, +l} with adjacent spacing l.
  static SlitGeometry three_slit(double slit_spacing, double screen_distance,
                                 double wavelength);

  std::size_t slit_count() const { return slit_positions_.size(); }
  double slit_position(std::size_t slit) const;
  const std::vector<double>& slit_positions() const { return slit_positions_; }
  double screen_distance() const { return screen_distance_; }
  double wavelength() const { return wavelength_; }
  double wave_number() const;  // k = 2*pi / lambda

 private:
  std::vector<double> slit_positions_;
  double screen_distance_;
  double wavelength_;
};

/// Distance from slit i to the detector at screen coordinate d:
/// r_i = sqrt(D^2 + (d - y_i)^2).
double path_length(const SlitGeometry& geometry, std::size_t slit, double d);

/// phi_i - phi_j = k (r_j - r_i). The common time-dependent phase and the
/// source-to-slit leg cancel in every difference, so they never appear.
double phase_difference(const SlitGeometry& geometry, std::size_t i,
                        std::size_t j, double d);

}  // namespace trislit

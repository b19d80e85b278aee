#include "trislit/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "trislit/kernels.hpp"

namespace trislit {

SlitGeometry::SlitGeometry(std::vector<double> slit_positions,
                           double screen_distance, double wavelength)
    : slit_positions_(std::move(slit_positions)),
      screen_distance_(screen_distance),
      wavelength_(wavelength) {
  if (slit_positions_.empty()) {
    throw std::invalid_argument("geometry: need at least one slit");
  }
  for (std::size_t i = 0; i < slit_positions_.size(); ++i) {
    if (!std::isfinite(slit_positions_[i])) {
      throw std::invalid_argument("geometry: slit positions must be finite");
    }
    if (i > 0 && !(slit_positions_[i - 1] < slit_positions_[i])) {
      throw std::invalid_argument(
          "geometry: slit positions must be strictly increasing");
    }
  }
  if (!(std::isfinite(screen_distance_) && screen_distance_ > 0.0)) {
    throw std::invalid_argument("geometry: screen distance must be positive");
  }
  if (!(std::isfinite(wavelength_) && wavelength_ > 0.0)) {
    throw std::invalid_argument("geometry: wavelength must be positive");
  }
}

SlitGeometry SlitGeometry::three_slit(double slit_spacing,
                                      double screen_distance,
                                      double wavelength) {
  if (!(std::isfinite(slit_spacing) && slit_spacing > 0.0)) {
    throw std::invalid_argument("geometry: slit spacing must be positive");
  }
  return SlitGeometry({-slit_spacing, 0.0, slit_spacing}, screen_distance,
                      wavelength);
}

double SlitGeometry::slit_position(std::size_t slit) const {
  if (slit >= slit_positions_.size()) {
    throw std::out_of_range("geometry: slit index " + std::to_string(slit) +
                            " out of range");
  }
  return slit_positions_[slit];
}

double SlitGeometry::wave_number() const {
  return 2.0 * std::numbers::pi / wavelength_;
}

double path_length(const SlitGeometry& geometry, std::size_t slit, double d) {
  if (!std::isfinite(d)) {
    throw std::invalid_argument("geometry: detector coordinate must be finite");
  }
  return kernels::element::path_length(geometry.slit_position(slit),
                                       geometry.screen_distance(), d);
}

double phase_difference(const SlitGeometry& geometry, std::size_t i,
                        std::size_t j, double d) {
  const double r_i = path_length(geometry, i, d);
  const double r_j = path_length(geometry, j, d);
  return geometry.wave_number() * (r_j - r_i);
}

}  // namespace trislit

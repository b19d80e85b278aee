#include "trislit/detection.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "trislit/kernels.hpp"

namespace trislit {

namespace {

void validate_amplitude(const DetectionAmplitude& amplitude) {
  if (!(std::isfinite(amplitude.intensity_scale) &&
        amplitude.intensity_scale > 0.0)) {
    throw std::invalid_argument("detection: intensity scale must be positive");
  }
}

void validate_configuration(const SlitGeometry& geometry,
                            const SlitConfiguration& configuration) {
  if (configuration.open_slits().back() >= geometry.slit_count()) {
    throw std::invalid_argument(
        "detection: configuration opens a slit the geometry does not have");
  }
}

}  // namespace

namespace detail {

double bilinear_probability(const CorrelationMatrix& correlations,
                            std::span<const double> path_lengths,
                            double wave_number, double intensity_scale) {
  const std::size_t n = path_lengths.size();
  if (correlations.size() != n) {
    throw std::invalid_argument(
        "detection: correlation matrix does not match the open slit count");
  }
  std::complex<double> accumulator{};
  double gross = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // phi_i - phi_j = k (r_j - r_i)
      const double dphi = wave_number * (path_lengths[j] - path_lengths[i]);
      const std::complex<double> rotation{std::cos(dphi), -std::sin(dphi)};
      const double weight = 1.0 / (path_lengths[i] * path_lengths[j]);
      accumulator += correlations.at(i, j) * rotation * weight;
      gross += std::abs(correlations.at(i, j)) * weight;
    }
  }
  // Hermitian correlations make the form real; the residual imaginary part is
  // rounding noise on the scale of the gross term sum, never of the (possibly
  // nearly cancelled) value itself.
  if (std::abs(accumulator.imag()) > 1e-14 * gross) {
    throw std::logic_error(
        "detection: bilinear form produced a non-real probability");
  }
  return intensity_scale * accumulator.real();
}

}  // namespace detail

double detection_probability(const SlitGeometry& geometry,
                             const CorrelationMatrix& correlations,
                             const SlitConfiguration& configuration, double d,
                             const DetectionAmplitude& amplitude) {
  validate_amplitude(amplitude);
  validate_configuration(geometry, configuration);
  double path_lengths[3];
  const auto& open = configuration.open_slits();
  for (std::size_t i = 0; i < open.size(); ++i) {
    path_lengths[i] = path_length(geometry, open[i], d);
  }
  return detail::bilinear_probability(
      correlations, std::span<const double>(path_lengths, open.size()),
      geometry.wave_number(), amplitude.intensity_scale);
}

double detection_probability(const SlitGeometry& geometry,
                             const SourceState& state,
                             const SlitConfiguration& configuration, double d,
                             const DetectionAmplitude& amplitude) {
  return detection_probability(geometry,
                               correlation_matrix(state, configuration),
                               configuration, d, amplitude);
}

std::vector<double> detection_curve(const SlitGeometry& geometry,
                                    const SourceState& state,
                                    const SlitConfiguration& configuration,
                                    std::span<const double> sweep,
                                    const DetectionAmplitude& amplitude) {
  validate_amplitude(amplitude);
  validate_configuration(geometry, configuration);
  for (double d : sweep) {
    if (!std::isfinite(d)) {
      throw std::invalid_argument(
          "detection: sweep coordinates must be finite");
    }
  }
  const auto correlations = correlation_matrix(state, configuration);
  const auto& open = configuration.open_slits();
  const std::size_t n_slits = open.size();
  const std::size_t n_points = sweep.size();

  double open_y[3];
  for (std::size_t s = 0; s < n_slits; ++s) {
    open_y[s] = geometry.slit_position(open[s]);
  }
  std::vector<double> radii(n_slits * n_points);
  kernels::active().path_lengths(open_y, n_slits, geometry.screen_distance(),
                                 sweep.data(), n_points, radii.data());

  const double k = geometry.wave_number();
  std::vector<double> out(n_points);
  double point_radii[3];
  for (std::size_t p = 0; p < n_points; ++p) {
    for (std::size_t s = 0; s < n_slits; ++s) {
      point_radii[s] = radii[s * n_points + p];
    }
    out[p] = detail::bilinear_probability(
        correlations, std::span<const double>(point_radii, n_slits), k,
        amplitude.intensity_scale);
  }
  return out;
}

}  // namespace trislit

#pragma once

#include <span>
#include <vector>

#include "trislit/geometry.hpp"
#include "trislit/source.hpp"

namespace trislit {

/// Overall detection scale |E|^2. Normalized quantities are independent of
/// it; it exists so that independence can be tested.
struct DetectionAmplitude {
  double intensity_scale = 1.0;  // must be positive and finite
};

/// Single-photon counting rate at screen coordinate d for the given open
/// slits:
///
///   P(d) = |E|^2 sum_{i,j open} C[i][j] e^{-i(phi_i - phi_j)} / (r_i r_j)
///
/// The general complex bilinear form is kept as written; the imaginary part
/// must cancel (Hermitian C) and is checked against the gross term magnitude
/// at every evaluation, throwing std::logic_error on violation.
double detection_probability(const SlitGeometry& geometry,
                             const CorrelationMatrix& correlations,
                             const SlitConfiguration& configuration, double d,
                             const DetectionAmplitude& amplitude = {});

double detection_probability(const SlitGeometry& geometry,
                             const SourceState& state,
                             const SlitConfiguration& configuration, double d,
                             const DetectionAmplitude& amplitude = {});

/// Probabilities over a detector sweep; element p corresponds to sweep[p].
/// Path lengths for the whole sweep go through the batch kernels; each point
/// then runs the same bilinear evaluation as detection_probability, so a
/// sweep entry equals the single-point call bit-for-bit. Points are
/// independent pure evaluations: chunked concurrent evaluation is safe and
/// reproduces the sequential bytes.
std::vector<double> detection_curve(const SlitGeometry& geometry,
                                    const SourceState& state,
                                    const SlitConfiguration& configuration,
                                    std::span<const double> sweep,
                                    const DetectionAmplitude& amplitude = {});

namespace detail {

/// Bilinear form shared by every probability path. path_lengths holds r_i for
/// the open slits in configuration order.
double bilinear_probability(const CorrelationMatrix& correlations,
                            std::span<const double> path_lengths,
                            double wave_number, double intensity_scale);

}  // namespace detail

}  // namespace trislit

#include "trislit/sorkin.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "trislit/kernels.hpp"

namespace trislit {

namespace {

struct CorrelationSet {
  // Indexed like ProbabilityComponents: singles a, b, c; pairs ab, ac, bc.
  std::array<CorrelationMatrix, 3> singles;
  std::array<CorrelationMatrix, 3> pairs;
  CorrelationMatrix triple;
};

CorrelationSet correlation_set(const SourceState& state) {
  const auto& single_configs = SlitConfiguration::singles();
  const auto& pair_configs = SlitConfiguration::pairs();
  return CorrelationSet{
      {correlation_matrix(state, single_configs[0]),
       correlation_matrix(state, single_configs[1]),
       correlation_matrix(state, single_configs[2])},
      {correlation_matrix(state, pair_configs[0]),
       correlation_matrix(state, pair_configs[1]),
       correlation_matrix(state, pair_configs[2])},
      correlation_matrix(state, SlitConfiguration::triple())};
}

void require_three_slits(const SlitGeometry& geometry) {
  if (geometry.slit_count() != 3) {
    throw std::invalid_argument(
        "sorkin: the three-path combination needs a three-slit geometry");
  }
}

void validate_amplitude(const DetectionAmplitude& amplitude) {
  if (!(std::isfinite(amplitude.intensity_scale) &&
        amplitude.intensity_scale > 0.0)) {
    throw std::invalid_argument("sorkin: intensity scale must be positive");
  }
}

// Shared by the single-point and sweep paths so their results are
// bit-identical: same radii representation, same bilinear evaluation.
ProbabilityComponents components_from_radii(const CorrelationSet& correlations,
                                            const double radii[3],
                                            double wave_number, double scale) {
  ProbabilityComponents components{};
  const std::size_t pair_index[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (std::size_t s = 0; s < 3; ++s) {
    components.singles[s] = detail::bilinear_probability(
        correlations.singles[s], std::span<const double>(&radii[s], 1),
        wave_number, scale);
  }
  for (std::size_t q = 0; q < 3; ++q) {
    const double pair_radii[2] = {radii[pair_index[q][0]],
                                  radii[pair_index[q][1]]};
    components.pairs[q] = detail::bilinear_probability(
        correlations.pairs[q], std::span<const double>(pair_radii, 2),
        wave_number, scale);
  }
  components.triple = detail::bilinear_probability(
      correlations.triple, std::span<const double>(radii, 3), wave_number,
      scale);
  return components;
}

SweepPoint assemble_point(double d, double screen_distance,
                          const ProbabilityComponents& components, double n1,
                          double n2, NormalizerMode mode, double normalizer) {
  SweepPoint point;
  point.d = d;
  point.d_over_D = d / screen_distance;
  point.p_a = components.singles[0];
  point.p_b = components.singles[1];
  point.p_c = components.singles[2];
  point.p_ab = components.pairs[0];
  point.p_ac = components.pairs[1];
  point.p_bc = components.pairs[2];
  point.p_abc = components.triple;
  point.kappa = kappa_from_components(components, n1, n2);
  point.kappa_normalized = (mode == NormalizerMode::p_abc_at_zero)
                               ? point.kappa / normalizer
                               : point.kappa;
  return point;
}

double resolve_normalizer(const SlitGeometry& geometry,
                          const SourceState& state, NormalizerMode mode,
                          const DetectionAmplitude& amplitude) {
  return (mode == NormalizerMode::p_abc_at_zero)
             ? p_abc_at_zero(geometry, state, amplitude)
             : 1.0;
}

}  // namespace

double kappa_identity(std::complex<double> alpha, std::complex<double> beta,
                      std::complex<double> gamma) {
  return kernels::element::sorkin_identity(alpha.real(), alpha.imag(),
                                           beta.real(), beta.imag(),
                                           gamma.real(), gamma.imag());
}

double ProbabilityComponents::singles_sum() const {
  return (singles[0] + singles[1]) + singles[2];
}

double ProbabilityComponents::pairs_sum() const {
  return (pairs[0] + pairs[1]) + pairs[2];
}

ProbabilityComponents probability_components(
    const SlitGeometry& geometry, const SourceState& state, double d,
    const DetectionAmplitude& amplitude) {
  require_three_slits(geometry);
  validate_amplitude(amplitude);
  const auto correlations = correlation_set(state);
  const double radii[3] = {path_length(geometry, 0, d),
                           path_length(geometry, 1, d),
                           path_length(geometry, 2, d)};
  return components_from_radii(correlations, radii, geometry.wave_number(),
                               amplitude.intensity_scale);
}

std::vector<ProbabilityComponents> probability_components_curve(
    const SlitGeometry& geometry, const SourceState& state,
    std::span<const double> sweep, const DetectionAmplitude& amplitude) {
  require_three_slits(geometry);
  validate_amplitude(amplitude);
  for (double d : sweep) {
    if (!std::isfinite(d)) {
      throw std::invalid_argument("sorkin: sweep coordinates must be finite");
    }
  }
  const auto correlations = correlation_set(state);
  const std::size_t n_points = sweep.size();
  std::vector<double> radii(3 * n_points);
  kernels::active().path_lengths(geometry.slit_positions().data(), 3,
                                 geometry.screen_distance(), sweep.data(),
                                 n_points, radii.data());
  const double k = geometry.wave_number();
  std::vector<ProbabilityComponents> out;
  out.reserve(n_points);
  for (std::size_t p = 0; p < n_points; ++p) {
    const double point_radii[3] = {radii[p], radii[n_points + p],
                                   radii[2 * n_points + p]};
    out.push_back(components_from_radii(correlations, point_radii, k,
                                        amplitude.intensity_scale));
  }
  return out;
}

double kappa_from_components(const ProbabilityComponents& components,
                             double n1, double n2) {
  const double pair_term = n2 * components.pairs_sum();
  const double single_term = n1 * components.singles_sum();
  return (components.triple - pair_term) + single_term;
}

double kappa_physical(const SlitGeometry& geometry, const SourceState& state,
                      double d, const SorkinConfig& config,
                      const DetectionAmplitude& amplitude) {
  return kappa_from_components(
      probability_components(geometry, state, d, amplitude), config.n1,
      config.n2);
}

double p_abc_at_zero(const SlitGeometry& geometry, const SourceState& state,
                     const DetectionAmplitude& amplitude) {
  const double value =
      probability_components(geometry, state, 0.0, amplitude).triple;
  if (!(value >= std::numeric_limits<double>::min())) {
    throw std::runtime_error(
        "sorkin: all-open probability at d = 0 underflowed; cannot normalize");
  }
  return value;
}

std::vector<SweepPoint> kappa_curve(const SlitGeometry& geometry,
                                    const SourceState& state,
                                    const SorkinConfig& config,
                                    std::span<const double> sweep,
                                    const DetectionAmplitude& amplitude) {
  const auto components =
      probability_components_curve(geometry, state, sweep, amplitude);
  const double normalizer =
      resolve_normalizer(geometry, state, config.normalizer_mode, amplitude);
  std::vector<SweepPoint> out;
  out.reserve(components.size());
  for (std::size_t p = 0; p < components.size(); ++p) {
    out.push_back(assemble_point(sweep[p], geometry.screen_distance(),
                                 components[p], config.n1, config.n2,
                                 config.normalizer_mode, normalizer));
  }
  return out;
}

std::vector<PerturbedCurve> perturbation_sweep(
    const SlitGeometry& geometry, const SourceState& state,
    const SorkinConfig& base,
    std::span<const std::pair<double, double>> relative_perturbations,
    std::span<const double> sweep, const DetectionAmplitude& amplitude) {
  if (relative_perturbations.empty()) {
    throw std::invalid_argument("sorkin: no perturbations requested");
  }
  for (const auto& [dn1, dn2] : relative_perturbations) {
    if (!std::isfinite(dn1) || !std::isfinite(dn2)) {
      throw std::invalid_argument("sorkin: perturbations must be finite");
    }
  }
  // One shared set of component probabilities; every perturbed curve is an
  // affine reweighting of the same numbers.
  const auto components =
      probability_components_curve(geometry, state, sweep, amplitude);
  const double normalizer =
      resolve_normalizer(geometry, state, base.normalizer_mode, amplitude);
  std::vector<PerturbedCurve> out;
  out.reserve(relative_perturbations.size());
  for (const auto& [dn1, dn2] : relative_perturbations) {
    PerturbedCurve curve;
    curve.delta_n1 = dn1;
    curve.delta_n2 = dn2;
    curve.config = base;
    curve.config.n1 = base.n1 * (1.0 + dn1);
    curve.config.n2 = base.n2 * (1.0 + dn2);
    curve.points.reserve(components.size());
    for (std::size_t p = 0; p < components.size(); ++p) {
      curve.points.push_back(assemble_point(
          sweep[p], geometry.screen_distance(), components[p], curve.config.n1,
          curve.config.n2, base.normalizer_mode, normalizer));
    }
    out.push_back(std::move(curve));
  }
  return out;
}

}  // namespace trislit

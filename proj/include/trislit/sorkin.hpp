#pragma once

#include <array>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "trislit/detection.hpp"
#include "trislit/geometry.hpp"
#include "trislit/source.hpp"

namespace trislit {

enum class NormalizerMode {
  unit,            // report kappa as computed
  p_abc_at_zero,   // divide by the all-open probability at d = 0
};

struct SorkinConfig {
  double n1 = 1.0 / 3.0;
  double n2 = 2.0 / 3.0;
  NormalizerMode normalizer_mode = NormalizerMode::p_abc_at_zero;
};

/// kappa_S for one complex amplitude triple; identically zero in exact
/// arithmetic, so the return value is pure rounding noise.
double kappa_identity(std::complex<double> alpha, std::complex<double> beta,
                      std::complex<double> gamma);

/// The seven detection probabilities entering the three-slit Sorkin
/// combination at one screen point.
struct ProbabilityComponents {
  std::array<double, 3> singles;  // P_a, P_b, P_c
  std::array<double, 3> pairs;    // P_ab, P_ac, P_bc
  double triple;                  // P_abc

  double singles_sum() const;  // fixed order: (P_a + P_b) + P_c
  double pairs_sum() const;    // fixed order: (P_ab + P_ac) + P_bc
};

ProbabilityComponents probability_components(
    const SlitGeometry& geometry, const SourceState& state, double d,
    const DetectionAmplitude& amplitude = {});

std::vector<ProbabilityComponents> probability_components_curve(
    const SlitGeometry& geometry, const SourceState& state,
    std::span<const double> sweep, const DetectionAmplitude& amplitude = {});

/// kappa = (P_abc - n2 * pairs_sum) + n1 * singles_sum, in exactly that
/// evaluation order. Keeping the order fixed (and the components shared
/// between perturbed variants) is what makes differences of perturbed curves
/// clean to near machine precision.
double kappa_from_components(const ProbabilityComponents& components,
                             double n1, double n2);

/// Physical Sorkin combination at one point. Requires a three-slit geometry.
/// With n1 = 1/3, n2 = 2/3 (flux-adjusted one- and two-slit runs) this is
/// zero to rounding; with n1 = n2 = 1 (naive reuse of the full-flux runs) it
/// is genuinely nonzero.
double kappa_physical(const SlitGeometry& geometry, const SourceState& state,
                      double d, const SorkinConfig& config,
                      const DetectionAmplitude& amplitude = {});

struct SweepPoint {
  double d = 0.0;
  double d_over_D = 0.0;
  double p_a = 0.0, p_b = 0.0, p_c = 0.0;
  double p_ab = 0.0, p_ac = 0.0, p_bc = 0.0;
  double p_abc = 0.0;
  double kappa = 0.0;
  double kappa_normalized = 0.0;
};

/// All-open probability at d = 0, the normalizer for
/// NormalizerMode::p_abc_at_zero. Throws if it underflows (degenerate
/// geometry or vacuum input cannot be used as a scale).
double p_abc_at_zero(const SlitGeometry& geometry, const SourceState& state,
                     const DetectionAmplitude& amplitude = {});

std::vector<SweepPoint> kappa_curve(const SlitGeometry& geometry,
                                    const SourceState& state,
                                    const SorkinConfig& config,
                                    std::span<const double> sweep,
                                    const DetectionAmplitude& amplitude = {});

struct PerturbedCurve {
  double delta_n1 = 0.0;  // relative: n1 = base.n1 * (1 + delta_n1)
  double delta_n2 = 0.0;
  SorkinConfig config;    // resolved coefficients actually used
  std::vector<SweepPoint> points;
};

/// Curves for a list of relative (delta_n1, delta_n2) perturbations of the
/// base coefficients. The component probabilities are computed once and
/// shared across all perturbations.
std::vector<PerturbedCurve> perturbation_sweep(
    const SlitGeometry& geometry, const SourceState& state,
    const SorkinConfig& base,
    std::span<const std::pair<double, double>> relative_perturbations,
    std::span<const double> sweep, const DetectionAmplitude& amplitude = {});

}  // namespace trislit

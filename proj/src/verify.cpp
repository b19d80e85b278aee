#include "trislit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <vector>

#include "trislit/fock_oracle.hpp"
#include "trislit/geometry.hpp"
#include "trislit/kernels.hpp"
#include "trislit/manifest.hpp"
#include "trislit/sorkin.hpp"
#include "trislit/source.hpp"

namespace trislit::verify {

namespace {

struct TripleBattery {
  std::vector<double> ar, ai, br, bi, gr, gi;
};

TripleBattery random_triples(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  TripleBattery battery;
  const auto n = static_cast<std::size_t>(count);
  for (auto* column :
       {&battery.ar, &battery.ai, &battery.br, &battery.bi, &battery.gr,
        &battery.gi}) {
    column->resize(n);
  }
  // Uniform over the modulus-10 disk, per amplitude.
  const auto fill = [&](std::vector<double>& re, std::vector<double>& im) {
    for (std::size_t t = 0; t < n; ++t) {
      const double radius = 10.0 * std::sqrt(unit(rng));
      const double angle = 2.0 * std::numbers::pi * unit(rng);
      re[t] = radius * std::cos(angle);
      im[t] = radius * std::sin(angle);
    }
  };
  fill(battery.ar, battery.ai);
  fill(battery.br, battery.bi);
  fill(battery.gr, battery.gi);
  return battery;
}

CheckResult identity_battery_check(const Options& options) {
  const auto battery =
      random_triples(options.identity_trials, options.seed);
  std::vector<double> kappa(battery.ar.size());
  kernels::active().sorkin_identity(battery.ar.data(), battery.ai.data(),
                                    battery.br.data(), battery.bi.data(),
                                    battery.gr.data(), battery.gi.data(),
                                    battery.ar.size(), kappa.data());
  double worst = 0.0;
  for (double value : kappa) {
    worst = std::max(worst, std::abs(value));
  }
  return {"sorkin identity battery", worst, 1e-10, worst <= 1e-10};
}

CheckResult kernel_equivalence_check(const Options& options) {
  const auto battery = random_triples(
      std::min(options.identity_trials, 4096), options.seed ^ 0x9e3779b9u);
  const std::size_t n = battery.ar.size();
  const auto& reference = kernels::kernel_set(kernels::Variant::scalar);
  double worst = 0.0;
  for (auto variant : {kernels::Variant::scalar, kernels::Variant::avx2}) {
    if (!kernels::variant_available(variant)) {
      continue;
    }
    const auto& candidate = kernels::kernel_set(variant);
    std::vector<double> expected(n), actual(n);
    reference.sorkin_identity(battery.ar.data(), battery.ai.data(),
                              battery.br.data(), battery.bi.data(),
                              battery.gr.data(), battery.gi.data(), n,
                              expected.data());
    candidate.sorkin_identity(battery.ar.data(), battery.ai.data(),
                              battery.br.data(), battery.bi.data(),
                              battery.gr.data(), battery.gi.data(), n,
                              actual.data());
    for (std::size_t t = 0; t < n; ++t) {
      worst = std::max(worst, std::abs(actual[t] - expected[t]));
    }
    // Path lengths: reuse the battery reals as sweep coordinates.
    const double slit_y[3] = {-0.13, 0.0, 0.13};
    std::vector<double> r_expected(3 * n), r_actual(3 * n);
    reference.path_lengths(slit_y, 3, 1.25, battery.ar.data(), n,
                           r_expected.data());
    candidate.path_lengths(slit_y, 3, 1.25, battery.ar.data(), n,
                           r_actual.data());
    for (std::size_t t = 0; t < r_expected.size(); ++t) {
      worst = std::max(worst, std::abs(r_actual[t] - r_expected[t]));
    }
  }
  return {"kernel equivalence (bitwise)", worst, 0.0, worst <= 0.0};
}

CheckResult correlation_identity_check(const Options& options) {
  double worst = 0.0;
  for (int n = 0; n <= options.max_photons; ++n) {
    const auto state = SourceState::fock(n);
    for (std::size_t open = 1; open <= 3; ++open) {
      std::vector<std::size_t> slits(open);
      for (std::size_t s = 0; s < open; ++s) {
        slits[s] = s;
      }
      const SlitConfiguration configuration(slits);
      const auto analytic = correlation_matrix(state, configuration);
      const auto expanded = fock::expand_fock_source(
          n, open, std::max(n, fock::default_max_total_photons));
      const double expected =
          static_cast<double>(n) / static_cast<double>(open);
      for (std::size_t i = 0; i < open; ++i) {
        for (std::size_t j = 0; j < open; ++j) {
          std::complex<double> entry = analytic.at(i, j);
          if (i == 0 && j == 0) {
            entry += options.inject_correlation_fault;
          }
          const auto oracle = fock::oracle_expectation(expanded, i, j);
          worst = std::max(worst, std::abs(entry - oracle));
          worst = std::max(worst, std::abs(entry - expected));
        }
      }
    }
  }
  return {"correlation identities (analytic vs fock oracle)", worst, 1e-12,
          worst <= 1e-12};
}

CheckResult trace_conservation_check(const Options& options) {
  double worst = 0.0;
  const SourceState states[] = {
      SourceState::fock(std::max(1, options.max_photons)),
      SourceState::coherent({1.5, -0.5}), SourceState::thermal(2.5)};
  for (const auto& state : states) {
    for (std::size_t open = 1; open <= 3; ++open) {
      std::vector<std::size_t> slits(open);
      for (std::size_t s = 0; s < open; ++s) {
        slits[s] = s;
      }
      const auto correlations =
          correlation_matrix(state, SlitConfiguration(slits));
      worst = std::max(
          worst, std::abs(correlations.trace() - state.mean_photon_number()));
    }
  }
  return {"correlation trace = <n>", worst, 1e-12, worst <= 1e-12};
}

CheckResult unitary_completion_check() {
  double worst = 0.0;
  for (std::size_t open = 2; open <= 3; ++open) {
    const auto transform = fock::unitary_completion(open);
    worst = std::max(worst, transform.max_unitarity_defect());
    const double coefficient = split_mode_relation(open)[0];
    for (std::size_t col = 0; col < open; ++col) {
      worst = std::max(worst,
                       std::abs(transform.at(0, col) - coefficient));
    }
  }
  return {"unitary completion of the splitting", worst, 1e-12, worst <= 1e-12};
}

CheckResult adjusted_null_check() {
  const auto geometry = SlitGeometry::three_slit(0.13, 1.25, 0.05);
  const auto state = SourceState::fock(1);
  const SorkinConfig config;  // 1/3, 2/3, normalized by P_abc(0)
  io::SweepSpec sweep_spec;   // default symmetric sweep
  const auto sweep = sweep_spec.detector_coordinates(geometry.screen_distance());
  const auto curve = kappa_curve(geometry, state, config, sweep);
  double worst = 0.0;
  for (const auto& point : curve) {
    worst = std::max(worst, std::abs(point.kappa_normalized));
  }
  return {"flux-adjusted combination vanishes", worst, 1e-12, worst <= 1e-12};
}

}  // namespace

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& check) { return check.passed; });
}

Report run(const Options& options) {
  Report report;
  report.checks.push_back(identity_battery_check(options));
  report.checks.push_back(kernel_equivalence_check(options));
  report.checks.push_back(correlation_identity_check(options));
  report.checks.push_back(trace_conservation_check(options));
  report.checks.push_back(unitary_completion_check());
  report.checks.push_back(adjusted_null_check());
  return report;
}

void print(const Report& report, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& check : report.checks) {
    width = std::max(width, check.name.size());
  }
  for (const auto& check : report.checks) {
    out << "  " << std::left << std::setw(static_cast<int>(width) + 2)
        << check.name << std::scientific << std::setprecision(2)
        << "max dev " << check.max_deviation << "  tol " << check.tolerance
        << "  " << (check.passed ? "PASS" : "FAIL") << "\n";
  }
  std::size_t passed = 0;
  for (const auto& check : report.checks) {
    passed += check.passed ? 1 : 0;
  }
  out << (report.all_passed() ? "verification passed" : "verification FAILED")
      << " (" << passed << "/" << report.checks.size() << " checks)\n";
}

}  // namespace trislit::verify

#include "trislit/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace trislit::fock {

namespace {

unsigned long long factorial(int n) {
  unsigned long long value = 1;
  for (int i = 2; i <= n; ++i) {
    value *= static_cast<unsigned long long>(i);
  }
  return value;
}

unsigned long long integer_power(unsigned long long base, int exponent) {
  unsigned long long value = 1;
  for (int i = 0; i < exponent; ++i) {
    value *= base;
  }
  return value;
}

int occupation_total(const FockStateVector::Occupation& occupation) {
  return std::accumulate(occupation.begin(), occupation.end(), 0);
}

// All tuples (k_1..k_modes) with sum n, lexicographic order.
void for_each_composition(
    int n, std::size_t modes,
    const std::function<void(const FockStateVector::Occupation&)>& visit,
    FockStateVector::Occupation& scratch, std::size_t mode) {
  if (mode + 1 == modes) {
    scratch[mode] = n;
    visit(scratch);
    return;
  }
  for (int k = 0; k <= n; ++k) {
    scratch[mode] = k;
    for_each_composition(n - k, modes, visit, scratch, mode + 1);
  }
}

}  // namespace

FockStateVector::FockStateVector(std::size_t mode_count, int max_total_photons)
    : mode_count_(mode_count), max_total_photons_(max_total_photons) {
  if (mode_count_ == 0) {
    throw std::invalid_argument("fock: need at least one mode");
  }
  if (max_total_photons_ < 0) {
    throw std::invalid_argument("fock: photon cap must be >= 0");
  }
}

std::complex<double> FockStateVector::amplitude(
    const Occupation& occupation) const {
  const auto it = amplitudes_.find(occupation);
  return it == amplitudes_.end() ? std::complex<double>{} : it->second;
}

void FockStateVector::set_amplitude(const Occupation& occupation,
                                    std::complex<double> value) {
  if (occupation.size() != mode_count_) {
    throw std::invalid_argument("fock: occupation tuple has wrong mode count");
  }
  for (int k : occupation) {
    if (k < 0) {
      throw std::invalid_argument("fock: occupation numbers must be >= 0");
    }
  }
  if (occupation_total(occupation) > max_total_photons_) {
    throw std::invalid_argument("fock: occupation exceeds the photon cap");
  }
  if (value == std::complex<double>{}) {
    amplitudes_.erase(occupation);
  } else {
    amplitudes_[occupation] = value;
  }
}

double FockStateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& [occupation, amplitude] : amplitudes_) {
    sum += std::norm(amplitude);
  }
  return sum;
}

FockStateVector expand_fock_source(int photon_count, std::size_t open_count,
                                   int max_total_photons) {
  if (open_count < 1 || open_count > 3) {
    throw std::invalid_argument("fock: open slit count must be 1, 2 or 3");
  }
  if (photon_count < 0) {
    throw std::invalid_argument("fock: photon count must be >= 0");
  }
  if (photon_count > max_total_photons) {
    throw std::invalid_argument(
        "fock: photon count exceeds the cap; truncation would corrupt the "
        "norm");
  }
  FockStateVector state(open_count, max_total_photons);
  const unsigned long long n_factorial = factorial(photon_count);
  const unsigned long long split_power =
      integer_power(open_count, photon_count);
  FockStateVector::Occupation scratch(open_count, 0);
  for_each_composition(
      photon_count, open_count,
      [&](const FockStateVector::Occupation& occupation) {
        unsigned long long denominator = 1;
        for (int k : occupation) {
          denominator *= factorial(k);
        }
        const unsigned long long multinomial = n_factorial / denominator;
        const double weight = static_cast<double>(multinomial) /
                              static_cast<double>(split_power);
        state.set_amplitude(occupation, std::sqrt(weight));
      },
      scratch, 0);
  return state;
}

FockStateVector apply_annihilation(const FockStateVector& state,
                                   std::size_t mode) {
  if (mode >= state.mode_count()) {
    throw std::out_of_range("fock: mode index out of range");
  }
  FockStateVector out(state.mode_count(), state.max_total_photons());
  for (const auto& [occupation, amplitude] : state.amplitudes()) {
    const int k = occupation[mode];
    if (k == 0) {
      continue;
    }
    FockStateVector::Occupation lowered = occupation;
    lowered[mode] = k - 1;
    out.set_amplitude(lowered,
                      out.amplitude(lowered) +
                          std::sqrt(static_cast<double>(k)) * amplitude);
  }
  return out;
}

FockStateVector apply_creation(const FockStateVector& state,
                               std::size_t mode) {
  if (mode >= state.mode_count()) {
    throw std::out_of_range("fock: mode index out of range");
  }
  FockStateVector out(state.mode_count(), state.max_total_photons());
  for (const auto& [occupation, amplitude] : state.amplitudes()) {
    FockStateVector::Occupation raised = occupation;
    raised[mode] = occupation[mode] + 1;
    // set_amplitude rejects tuples over the cap.
    out.set_amplitude(raised,
                      out.amplitude(raised) +
                          std::sqrt(static_cast<double>(raised[mode])) *
                              amplitude);
  }
  return out;
}

std::complex<double> inner_product(const FockStateVector& bra,
                                   const FockStateVector& ket) {
  if (bra.mode_count() != ket.mode_count()) {
    throw std::invalid_argument("fock: mode counts differ");
  }
  const bool bra_smaller = bra.amplitudes().size() <= ket.amplitudes().size();
  const auto& outer = bra_smaller ? bra.amplitudes() : ket.amplitudes();
  std::complex<double> sum{};
  for (const auto& [occupation, amplitude] : outer) {
    if (bra_smaller) {
      sum += std::conj(amplitude) * ket.amplitude(occupation);
    } else {
      sum += std::conj(bra.amplitude(occupation)) * amplitude;
    }
  }
  return sum;
}

std::complex<double> oracle_expectation(const FockStateVector& state,
                                        std::size_t i, std::size_t j) {
  return inner_product(apply_annihilation(state, i),
                       apply_annihilation(state, j));
}

ModeTransform::ModeTransform(std::size_t size)
    : size_(size), entries_(size * size) {
  if (size_ == 0) {
    throw std::invalid_argument("transform: size must be >= 1");
  }
}

std::complex<double> ModeTransform::at(std::size_t i, std::size_t j) const {
  if (i >= size_ || j >= size_) {
    throw std::out_of_range("transform: index out of range");
  }
  return entries_[i * size_ + j];
}

void ModeTransform::set(std::size_t i, std::size_t j,
                        std::complex<double> value) {
  if (i >= size_ || j >= size_) {
    throw std::out_of_range("transform: index out of range");
  }
  entries_[i * size_ + j] = value;
}

double ModeTransform::max_unitarity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      std::complex<double> sum{};
      for (std::size_t k = 0; k < size_; ++k) {
        sum += entries_[i * size_ + k] * std::conj(entries_[j * size_ + k]);
      }
      const double expected = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(sum - expected));
    }
  }
  return worst;
}

ModeTransform unitary_completion(std::size_t open_count) {
  if (open_count < 2 || open_count > 3) {
    throw std::invalid_argument("transform: completion defined for N in {2, 3}");
  }
  ModeTransform transform(open_count);
  const double root = std::sqrt(static_cast<double>(open_count));
  if (open_count == 2) {
    const double s = 1.0 / root;
    transform.set(0, 0, s);
    transform.set(0, 1, s);
    transform.set(1, 0, s);
    transform.set(1, 1, -s);
    return transform;
  }
  // Discrete Fourier matrix; row 0 is the equal-splitting relation.
  for (std::size_t row = 0; row < open_count; ++row) {
    for (std::size_t col = 0; col < open_count; ++col) {
      const double angle = 2.0 * std::numbers::pi *
                           static_cast<double>(row * col) /
                           static_cast<double>(open_count);
      transform.set(row, col, std::polar(1.0 / root, angle));
    }
  }
  return transform;
}

}  // namespace trislit::fock

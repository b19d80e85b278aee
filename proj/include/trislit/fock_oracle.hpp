#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

// Brute-force Fock-space machinery. This is the slow, obviously-correct route
// used to cross-check the analytic correlation matrices: states are explicit
// occupation-number expansions and expectation values are evaluated by ladder
// operator action, never by the closed forms under test.

namespace trislit::fock {

inline constexpr int default_max_total_photons = 8;

/// Sparse multimode Fock vector: occupation tuple -> complex amplitude.
class FockStateVector {
 public:
  using Occupation = std::vector<int>;
  using AmplitudeMap = std::map<Occupation, std::complex<double>>;

  FockStateVector(std::size_t mode_count,
                  int max_total_photons = default_max_total_photons);

  std::size_t mode_count() const { return mode_count_; }
  int max_total_photons() const { return max_total_photons_; }

  std::complex<double> amplitude(const Occupation& occupation) const;
  void set_amplitude(const Occupation& occupation, std::complex<double> value);
  const AmplitudeMap& amplitudes() const { return amplitudes_; }
  double norm_squared() const;

 private:
  std::size_t mode_count_;
  int max_total_photons_;
  AmplitudeMap amplitudes_;
};

/// |n> split evenly over N slit modes. The amplitude on the tuple
/// (k_1, ..., k_N) is sqrt(n! / (k_1! ... k_N!)) / sqrt(N^n), with the
/// factorials done in exact integer arithmetic before the square root.
/// Rejects n > max_total_photons: truncating would corrupt the norm.
FockStateVector expand_fock_source(
    int photon_count, std::size_t open_count,
    int max_total_photons = default_max_total_photons);

FockStateVector apply_annihilation(const FockStateVector& state,
                                   std::size_t mode);
/// Throws if any populated tuple would exceed the photon cap.
FockStateVector apply_creation(const FockStateVector& state, std::size_t mode);

std::complex<double> inner_product(const FockStateVector& bra,
                                   const FockStateVector& ket);

/// <state| a_i^dag a_j |state>, evaluated as <a_i state, a_j state>.
std::complex<double> oracle_expectation(const FockStateVector& state,
                                        std::size_t i, std::size_t j);

/// Small dense complex matrix mapping source-side modes to slit modes.
class ModeTransform {
 public:
  explicit ModeTransform(std::size_t size);
  std::size_t size() const { return size_; }
  std::complex<double> at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::complex<double> value);
  double max_unitarity_defect() const;  // max |(U U^dag - I)_{ij}|

 private:
  std::size_t size_;
  std::vector<std::complex<double>> entries_;
};

/// Unitary whose first row is the equal-splitting relation (1/sqrt(N), ...).
/// Realized as the N-point discrete Fourier matrix; for N = 2 that is
/// [[1, 1], [1, -1]] / sqrt(2). Supported for N in {2, 3}.
ModeTransform unitary_completion(std::size_t open_count);

}  // namespace trislit::fock

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace trislit {

enum class SourceKind { fock, coherent, thermal };

/// Single-mode source feeding the slit plane. Only the mean photon number
/// survives into the detection probabilities; the distinct variants exist so
/// that statement can be checked numerically instead of assumed.
class SourceState {
 public:
  static SourceState fock(int photon_count);
  static SourceState coherent(std::complex<double> amplitude);
  static SourceState thermal(double mean_photon_number);

  /// Accepts "fock:<n>", "coherent:<re>,<im>", "thermal:<mean>".
  static SourceState parse(const std::string& spec);

  SourceKind kind() const { return kind_; }
  double mean_photon_number() const;
  int fock_photon_count() const;                    // fock only
  std::complex<double> coherent_amplitude() const;  // coherent only
  std::string to_spec() const;

 private:
  SourceState(SourceKind kind, int n, std::complex<double> alpha, double mean);
  SourceKind kind_;
  int fock_n_;
  std::complex<double> alpha_;
  double thermal_mean_;
};

/// Nonempty subset of the slit labels {a, b, c}, stored as sorted indices
/// {0, 1, 2}. A closed slit contributes no mode at all.
class SlitConfiguration {
 public:
  explicit SlitConfiguration(std::vector<std::size_t> open_slits);

  /// "a", "ac", "abc", ...
  static SlitConfiguration parse(const std::string& labels);

  static const std::array<SlitConfiguration, 3>& singles();
  static const std::array<SlitConfiguration, 3>& pairs();  // ab, ac, bc
  static const SlitConfiguration& triple();

  std::size_t open_count() const { return open_slits_.size(); }
  const std::vector<std::size_t>& open_slits() const { return open_slits_; }
  std::string labels() const;

 private:
  std::vector<std::size_t> open_slits_;
};

/// Hermitian matrix of slit-mode correlations <s_i^dag s_j>, indexed in the
/// order of SlitConfiguration::open_slits(). Hermiticity holds by
/// construction: only the upper triangle is set, the rest is mirrored.
class CorrelationMatrix {
 public:
  explicit CorrelationMatrix(std::size_t size);

  std::size_t size() const { return size_; }
  std::complex<double> at(std::size_t i, std::size_t j) const;
  void set_upper(std::size_t i, std::size_t j, std::complex<double> value);
  double trace() const;  // diagonal is real by construction

 private:
  std::size_t size_;
  std::array<std::complex<double>, 9> entries_;
};

/// Equal-splitting amplitudes of the source mode across N open slits:
/// N copies of 1/sqrt(N).
std::vector<double> split_mode_relation(std::size_t open_count);

/// A coherent state splits as a product of per-slit coherent states with
/// amplitude alpha/sqrt(N).
std::vector<std::complex<double>> split_coherent(std::complex<double> alpha,
                                                 std::size_t open_count);

/// Slit-mode correlations for the given source behind the open slits. Every
/// entry comes out <n>/N for all three source variants; each variant is
/// computed by its own route (Fock counting, coherent amplitude products,
/// thermal mean), not by fiat.
CorrelationMatrix correlation_matrix(const SourceState& state,
                                     const SlitConfiguration& configuration);

}  // namespace trislit

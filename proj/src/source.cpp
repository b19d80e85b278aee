#include "trislit/source.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace trislit {

namespace {

double parse_number(const std::string& text, const char* what) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end) {
    throw std::invalid_argument(std::string("source: malformed ") + what +
                                " in \"" + text + "\"");
  }
  return value;
}

std::string format_shortest(double value) {
  char buffer[32];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

}  // namespace

SourceState::SourceState(SourceKind kind, int n, std::complex<double> alpha,
                         double mean)
    : kind_(kind), fock_n_(n), alpha_(alpha), thermal_mean_(mean) {}

SourceState SourceState::fock(int photon_count) {
  if (photon_count < 0) {
    throw std::invalid_argument("source: photon count must be >= 0");
  }
  return SourceState(SourceKind::fock, photon_count, {}, 0.0);
}

SourceState SourceState::coherent(std::complex<double> amplitude) {
  if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag())) {
    throw std::invalid_argument("source: coherent amplitude must be finite");
  }
  return SourceState(SourceKind::coherent, 0, amplitude, 0.0);
}

SourceState SourceState::thermal(double mean_photon_number) {
  if (!(std::isfinite(mean_photon_number) && mean_photon_number >= 0.0)) {
    throw std::invalid_argument("source: thermal mean must be >= 0");
  }
  return SourceState(SourceKind::thermal, 0, {}, mean_photon_number);
}

SourceState SourceState::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument(
        "source: expected fock:<n>, coherent:<re>,<im> or thermal:<mean>, "
        "got \"" +
        spec + "\"");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);
  if (kind == "fock") {
    const double n = parse_number(body, "photon count");
    if (n != std::floor(n)) {
      throw std::invalid_argument("source: fock photon count must be integer");
    }
    return fock(static_cast<int>(n));
  }
  if (kind == "coherent") {
    const auto comma = body.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument(
          "source: coherent spec needs <re>,<im>, got \"" + spec + "\"");
    }
    const double re = parse_number(body.substr(0, comma), "real part");
    const double im = parse_number(body.substr(comma + 1), "imaginary part");
    return coherent({re, im});
  }
  if (kind == "thermal") {
    return thermal(parse_number(body, "mean photon number"));
  }
  throw std::invalid_argument("source: unknown kind \"" + kind + "\"");
}

double SourceState::mean_photon_number() const {
  switch (kind_) {
    case SourceKind::fock:
      return static_cast<double>(fock_n_);
    case SourceKind::coherent:
      return std::norm(alpha_);
    case SourceKind::thermal:
      return thermal_mean_;
  }
  return 0.0;
}

int SourceState::fock_photon_count() const {
  if (kind_ != SourceKind::fock) {
    throw std::logic_error("source: not a fock state");
  }
  return fock_n_;
}

std::complex<double> SourceState::coherent_amplitude() const {
  if (kind_ != SourceKind::coherent) {
    throw std::logic_error("source: not a coherent state");
  }
  return alpha_;
}

std::string SourceState::to_spec() const {
  switch (kind_) {
    case SourceKind::fock:
      return "fock:" + std::to_string(fock_n_);
    case SourceKind::coherent:
      return "coherent:" + format_shortest(alpha_.real()) + "," +
             format_shortest(alpha_.imag());
    case SourceKind::thermal:
      return "thermal:" + format_shortest(thermal_mean_);
  }
  return {};
}

SlitConfiguration::SlitConfiguration(std::vector<std::size_t> open_slits)
    : open_slits_(std::move(open_slits)) {
  if (open_slits_.empty()) {
    throw std::invalid_argument("configuration: at least one slit must be open");
  }
  for (std::size_t i = 0; i < open_slits_.size(); ++i) {
    if (open_slits_[i] > 2) {
      throw std::invalid_argument("configuration: slit index out of range");
    }
    if (i > 0 && !(open_slits_[i - 1] < open_slits_[i])) {
      throw std::invalid_argument(
          "configuration: slit indices must be strictly increasing");
    }
  }
}

SlitConfiguration SlitConfiguration::parse(const std::string& labels) {
  std::vector<std::size_t> slits;
  for (char label : labels) {
    if (label < 'a' || label > 'c') {
      throw std::invalid_argument(
          "configuration: labels must be drawn from {a, b, c}");
    }
    slits.push_back(static_cast<std::size_t>(label - 'a'));
  }
  return SlitConfiguration(std::move(slits));
}

const std::array<SlitConfiguration, 3>& SlitConfiguration::singles() {
  static const std::array<SlitConfiguration, 3> value{
      SlitConfiguration({0}), SlitConfiguration({1}), SlitConfiguration({2})};
  return value;
}

const std::array<SlitConfiguration, 3>& SlitConfiguration::pairs() {
  static const std::array<SlitConfiguration, 3> value{
      SlitConfiguration({0, 1}), SlitConfiguration({0, 2}),
      SlitConfiguration({1, 2})};
  return value;
}

const SlitConfiguration& SlitConfiguration::triple() {
  static const SlitConfiguration value({0, 1, 2});
  return value;
}

std::string SlitConfiguration::labels() const {
  std::string out;
  for (std::size_t slit : open_slits_) {
    out.push_back(static_cast<char>('a' + slit));
  }
  return out;
}

CorrelationMatrix::CorrelationMatrix(std::size_t size)
    : size_(size), entries_{} {
  if (size_ == 0 || size_ > 3) {
    throw std::invalid_argument("correlations: size must be 1, 2 or 3");
  }
}

std::complex<double> CorrelationMatrix::at(std::size_t i,
                                           std::size_t j) const {
  if (i >= size_ || j >= size_) {
    throw std::out_of_range("correlations: index out of range");
  }
  return entries_[i * size_ + j];
}

void CorrelationMatrix::set_upper(std::size_t i, std::size_t j,
                                  std::complex<double> value) {
  if (i >= size_ || j >= size_ || i > j) {
    throw std::out_of_range("correlations: set_upper needs i <= j in range");
  }
  if (i == j && value.imag() != 0.0) {
    throw std::invalid_argument("correlations: diagonal must be real");
  }
  entries_[i * size_ + j] = value;
  entries_[j * size_ + i] = std::conj(value);
}

double CorrelationMatrix::trace() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < size_; ++i) {
    sum += entries_[i * size_ + i].real();
  }
  return sum;
}

std::vector<double> split_mode_relation(std::size_t open_count) {
  if (open_count == 0) {
    throw std::invalid_argument("split: open slit count must be >= 1");
  }
  const double coefficient = 1.0 / std::sqrt(static_cast<double>(open_count));
  return std::vector<double>(open_count, coefficient);
}

std::vector<std::complex<double>> split_coherent(std::complex<double> alpha,
                                                 std::size_t open_count) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw std::invalid_argument("split: coherent amplitude must be finite");
  }
  if (open_count == 0) {
    throw std::invalid_argument("split: open slit count must be >= 1");
  }
  const double root = std::sqrt(static_cast<double>(open_count));
  return std::vector<std::complex<double>>(
      open_count, std::complex<double>(alpha.real() / root,
                                       alpha.imag() / root));
}

CorrelationMatrix correlation_matrix(const SourceState& state,
                                     const SlitConfiguration& configuration) {
  const std::size_t n = configuration.open_count();
  CorrelationMatrix correlations(n);
  switch (state.kind()) {
    case SourceKind::fock: {
      const double value = static_cast<double>(state.fock_photon_count()) /
                           static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          correlations.set_upper(i, j, value);
        }
      }
      break;
    }
    case SourceKind::coherent: {
      // Product of per-slit coherent states: <s_i^dag s_j> = conj(a_i) a_j.
      const auto amplitudes =
          split_coherent(state.coherent_amplitude(), n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          correlations.set_upper(i, j,
                                 std::conj(amplitudes[i]) * amplitudes[j]);
        }
      }
      break;
    }
    case SourceKind::thermal: {
      // Statistical mixture of coherent states: every coherent component
      // contributes conj(alpha_i) alpha_j / N, so the mixture average is
      // <n>/N in every entry, like the other variants.
      const double value = state.mean_photon_number() / static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          correlations.set_upper(i, j, value);
        }
      }
      break;
    }
  }
  return correlations;
}

}  // namespace trislit

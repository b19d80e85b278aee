#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "trislit/geometry.hpp"
#include "trislit/sorkin.hpp"

namespace trislit::io {

struct SweepSpec {
  enum class Units { meters, d_over_D };

  double min = -0.5;
  double max = 0.5;
  int steps = 2001;
  Units units = Units::d_over_D;

  /// Evenly spaced detector coordinates in meters.
  std::vector<double> detector_coordinates(double screen_distance) const;
};

/// Complete description of one sweep run. Serialized as the run manifest;
/// parsing an emitted manifest reproduces the configuration exactly
/// (doubles round-trip bit-for-bit) and re-emitting gives identical bytes.
struct RunConfig {
  SlitGeometry geometry = SlitGeometry::three_slit(0.13, 1.25, 0.05);
  std::string source_spec = "fock:1";
  SorkinConfig sorkin;
  SweepSpec sweep;
  std::string tool_version;  // filled at emit time when empty
  std::string timestamp;     // ISO-8601 UTC; preserved across round-trips
};

std::string manifest_to_string(const RunConfig& config);
RunConfig manifest_from_string(const std::string& text);

void write_manifest(const RunConfig& config,
                    const std::filesystem::path& path);
RunConfig read_manifest(const std::filesystem::path& path);

std::string current_timestamp_utc();

const char* normalizer_name(NormalizerMode mode);
NormalizerMode normalizer_from_name(const std::string& name);

}  // namespace trislit::io

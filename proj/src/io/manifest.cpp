#include "trislit/manifest.hpp"

#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "trislit/source.hpp"
#include "trislit/version.hpp"

namespace trislit::io {

std::vector<double> SweepSpec::detector_coordinates(
    double screen_distance) const {
  if (steps < 1) {
    throw std::invalid_argument("sweep: need at least one step");
  }
  if (!(std::isfinite(min) && std::isfinite(max) && min <= max)) {
    throw std::invalid_argument("sweep: bounds must be finite with min <= max");
  }
  const double scale = (units == Units::d_over_D) ? screen_distance : 1.0;
  std::vector<double> out(static_cast<std::size_t>(steps));
  if (steps == 1) {
    out[0] = min * scale;
    return out;
  }
  const double spacing = (max - min) / static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] =
        (min + spacing * static_cast<double>(i)) * scale;
  }
  return out;
}

const char* normalizer_name(NormalizerMode mode) {
  return mode == NormalizerMode::p_abc_at_zero ? "pabc0" : "unit";
}

NormalizerMode normalizer_from_name(const std::string& name) {
  if (name == "pabc0") {
    return NormalizerMode::p_abc_at_zero;
  }
  if (name == "unit") {
    return NormalizerMode::unit;
  }
  throw std::invalid_argument("manifest: unknown normalizer \"" + name + "\"");
}

namespace {

const char* units_name(SweepSpec::Units units) {
  return units == SweepSpec::Units::d_over_D ? "d_over_D" : "meters";
}

SweepSpec::Units units_from_name(const std::string& name) {
  if (name == "d_over_D") {
    return SweepSpec::Units::d_over_D;
  }
  if (name == "meters") {
    return SweepSpec::Units::meters;
  }
  throw std::invalid_argument("manifest: unknown sweep units \"" + name +
                              "\"");
}

}  // namespace

std::string manifest_to_string(const RunConfig& config) {
  nlohmann::json root;
  root["geometry"]["slit_positions"] = config.geometry.slit_positions();
  root["geometry"]["screen_distance"] = config.geometry.screen_distance();
  root["geometry"]["wavelength"] = config.geometry.wavelength();
  // Canonicalize so emitted manifests always carry a parseable spec.
  root["source"] = SourceState::parse(config.source_spec).to_spec();
  root["sorkin"]["n1"] = config.sorkin.n1;
  root["sorkin"]["n2"] = config.sorkin.n2;
  root["sorkin"]["normalizer"] = normalizer_name(config.sorkin.normalizer_mode);
  root["sweep"]["min"] = config.sweep.min;
  root["sweep"]["max"] = config.sweep.max;
  root["sweep"]["steps"] = config.sweep.steps;
  root["sweep"]["units"] = units_name(config.sweep.units);
  root["tool"]["name"] = tool_name;
  root["tool"]["version"] =
      config.tool_version.empty() ? tool_version : config.tool_version;
  root["timestamp"] =
      config.timestamp.empty() ? current_timestamp_utc() : config.timestamp;
  return root.dump(2) + "\n";
}

RunConfig manifest_from_string(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& error) {
    throw std::runtime_error(std::string("manifest: invalid JSON: ") +
                             error.what());
  }
  try {
    RunConfig config;
    const auto& geometry = root.at("geometry");
    config.geometry = SlitGeometry(
        geometry.at("slit_positions").get<std::vector<double>>(),
        geometry.at("screen_distance").get<double>(),
        geometry.at("wavelength").get<double>());
    config.source_spec = root.at("source").get<std::string>();
    SourceState::parse(config.source_spec);  // validate early
    const auto& sorkin = root.at("sorkin");
    config.sorkin.n1 = sorkin.at("n1").get<double>();
    config.sorkin.n2 = sorkin.at("n2").get<double>();
    config.sorkin.normalizer_mode =
        normalizer_from_name(sorkin.at("normalizer").get<std::string>());
    const auto& sweep = root.at("sweep");
    config.sweep.min = sweep.at("min").get<double>();
    config.sweep.max = sweep.at("max").get<double>();
    config.sweep.steps = sweep.at("steps").get<int>();
    config.sweep.units = units_from_name(sweep.at("units").get<std::string>());
    config.tool_version = root.at("tool").at("version").get<std::string>();
    config.timestamp = root.at("timestamp").get<std::string>();
    return config;
  } catch (const nlohmann::json::exception& error) {
    throw std::runtime_error(std::string("manifest: missing or mistyped field: ") +
                             error.what());
  }
}

void write_manifest(const RunConfig& config,
                    const std::filesystem::path& path) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) {
    throw std::runtime_error("manifest: cannot open " + path.string() +
                             " for writing");
  }
  const std::string text = manifest_to_string(config);
  stream.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!stream) {
    throw std::runtime_error("manifest: write to " + path.string() + " failed");
  }
}

RunConfig read_manifest(const std::filesystem::path& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw std::runtime_error("manifest: cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return manifest_from_string(buffer.str());
}

std::string current_timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return std::string(buffer);
}

}  // namespace trislit::io

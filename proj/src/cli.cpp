#include "trislit/cli.hpp"

#include <charconv>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "trislit/csv.hpp"
#include "trislit/manifest.hpp"
#include "trislit/sorkin.hpp"
#include "trislit/source.hpp"
#include "trislit/verify.hpp"
#include "trislit/version.hpp"

namespace trislit::cli {

namespace {

struct CommonFlags {
  double wavelength = 0.05;
  double slit_spacing = 0.13;
  double screen_distance = 1.25;
  std::string source = "fock:1";
  std::string sweep;
  bool sweep_in_d_over_D = false;
};

struct CommonOptions {
  CLI::Option* wavelength = nullptr;
  CLI::Option* slit_spacing = nullptr;
  CLI::Option* screen = nullptr;
  CLI::Option* source = nullptr;
  CLI::Option* sweep = nullptr;
  CLI::Option* d_over_D = nullptr;
};

CommonOptions add_common_options(CLI::App* command, CommonFlags& flags) {
  CommonOptions options;
  options.wavelength =
      command->add_option("--lambda", flags.wavelength, "Wavelength in meters")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
  options.slit_spacing =
      command
          ->add_option("--slit-spacing", flags.slit_spacing,
                       "Adjacent slit spacing l in meters; slits sit at -l, 0, +l")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
  options.screen =
      command
          ->add_option("--screen", flags.screen_distance,
                       "Slit-plane to screen distance D in meters")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
  options.source =
      command
          ->add_option("--source", flags.source,
                       "Source state: fock:<n> | coherent:<re>,<im> | "
                       "thermal:<mean>")
          ->capture_default_str();
  options.sweep =
      command
          ->add_option("--sweep", flags.sweep,
                       "Detector sweep as <min>:<max>:<steps> (default "
                       "-0.5:0.5:2001 in d/D units)");
  options.d_over_D =
      command->add_flag("--d-over-D", flags.sweep_in_d_over_D,
                        "Interpret --sweep bounds as d/D instead of meters");
  return options;
}

io::SweepSpec parse_sweep_spec(const std::string& text, bool in_d_over_D) {
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw CLI::ValidationError("--sweep",
                               "expected <min>:<max>:<steps>, got \"" + text +
                                   "\"");
  }
  const auto number = [&](const std::string& piece, auto& out) {
    const char* begin = piece.data();
    const char* end = begin + piece.size();
    const auto result = std::from_chars(begin, end, out);
    if (result.ec != std::errc{} || result.ptr != end) {
      throw CLI::ValidationError("--sweep", "malformed number \"" + piece +
                                                "\"");
    }
  };
  io::SweepSpec spec;
  number(text.substr(0, first), spec.min);
  number(text.substr(first + 1, second - first - 1), spec.max);
  number(text.substr(second + 1), spec.steps);
  if (spec.steps < 1) {
    throw CLI::ValidationError("--sweep", "steps must be >= 1");
  }
  if (!(spec.min <= spec.max)) {
    throw CLI::ValidationError("--sweep", "min must be <= max");
  }
  spec.units = in_d_over_D ? io::SweepSpec::Units::d_over_D
                           : io::SweepSpec::Units::meters;
  return spec;
}

io::RunConfig config_from_common(const CommonFlags& flags,
                                 const CommonOptions& options) {
  io::RunConfig config;
  config.geometry = SlitGeometry::three_slit(
      flags.slit_spacing, flags.screen_distance, flags.wavelength);
  config.source_spec = SourceState::parse(flags.source).to_spec();
  if (options.sweep->count() > 0) {
    config.sweep = parse_sweep_spec(flags.sweep, flags.sweep_in_d_over_D);
  }
  return config;
}

std::filesystem::path manifest_path_for(const std::filesystem::path& csv) {
  std::filesystem::path path = csv;
  path.replace_extension();
  path += ".manifest.json";
  return path;
}

void write_run(const io::RunConfig& config,
               const std::vector<SweepPoint>& points,
               const std::filesystem::path& csv_path) {
  io::write_csv(points, csv_path);
  io::write_manifest(config, manifest_path_for(csv_path));
  std::cout << "wrote " << csv_path.string() << " (" << points.size()
            << " rows)\n";
  std::cout << "wrote " << manifest_path_for(csv_path).string() << "\n";
}

int run_sweep(io::RunConfig config, const std::string& out) {
  if (config.tool_version.empty()) {
    config.tool_version = tool_version;
  }
  if (config.timestamp.empty()) {
    config.timestamp = io::current_timestamp_utc();
  }
  const auto state = SourceState::parse(config.source_spec);
  const auto sweep =
      config.sweep.detector_coordinates(config.geometry.screen_distance());
  const auto curve =
      kappa_curve(config.geometry, state, config.sorkin, sweep);
  write_run(config, curve, out);
  return 0;
}

int run_figure2(const io::RunConfig& base_config, const std::string& prefix) {
  // Flux-adjusted baseline with the textbook-style misadjustment: both
  // two-slit coefficients high by 1.3%, the one-slit coefficient high by
  // 1.3% (upper curve) or 1.2% (lower curve).
  const std::pair<double, double> perturbations[] = {
      {1.3 / 100.0, 1.3 / 100.0},
      {1.2 / 100.0, 1.3 / 100.0},
  };
  const auto state = SourceState::parse(base_config.source_spec);
  const auto sweep = base_config.sweep.detector_coordinates(
      base_config.geometry.screen_distance());
  const auto curves =
      perturbation_sweep(base_config.geometry, state, base_config.sorkin,
                         perturbations, sweep);
  const char* suffixes[] = {"upper", "lower"};
  const std::string timestamp = io::current_timestamp_utc();
  for (std::size_t c = 0; c < curves.size(); ++c) {
    io::RunConfig config = base_config;
    config.sorkin = curves[c].config;
    config.tool_version = tool_version;
    config.timestamp = timestamp;
    write_run(config, curves[c].points,
              prefix + "_" + suffixes[c] + ".csv");
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  std::vector<std::string> arguments(argv + 1, argv + argc);
  // Bare flags mean a sweep: "trislit --lambda 0.1" == "trislit sweep ...".
  if (arguments.empty() ||
      (!arguments[0].empty() && arguments[0][0] == '-' &&
       arguments[0] != "-h" && arguments[0] != "--help" &&
       arguments[0] != "--version")) {
    arguments.insert(arguments.begin(), "sweep");
  }
  std::vector<const char*> injected;
  injected.reserve(arguments.size() + 1);
  injected.push_back(tool_name);
  for (const auto& argument : arguments) {
    injected.push_back(argument.c_str());
  }

  CLI::App app{
      "Multi-slit interferometer simulator: single-photon detection curves "
      "and the three-path Sorkin combination"};
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(1);

  // sweep
  auto* sweep_command = app.add_subcommand(
      "sweep", "Evaluate the kappa sweep and write CSV plus run manifest");
  CommonFlags sweep_flags;
  const auto sweep_options = add_common_options(sweep_command, sweep_flags);
  double n1 = 1.0 / 3.0;
  double n2 = 2.0 / 3.0;
  double n1_pct = 0.0;
  double n2_pct = 0.0;
  std::string normalize = "pabc0";
  std::string sweep_out = "sweep.csv";
  std::string manifest_in;
  auto* n1_option =
      sweep_command->add_option("--n1", n1, "One-slit coefficient")
          ->capture_default_str();
  auto* n1_pct_option = sweep_command->add_option(
      "--n1-pct", n1_pct, "Relative tweak: n1 = 1/3 * (1 + pct/100)");
  auto* n2_option =
      sweep_command->add_option("--n2", n2, "Two-slit coefficient")
          ->capture_default_str();
  auto* n2_pct_option = sweep_command->add_option(
      "--n2-pct", n2_pct, "Relative tweak: n2 = 2/3 * (1 + pct/100)");
  n1_option->excludes(n1_pct_option);
  n1_pct_option->excludes(n1_option);
  n2_option->excludes(n2_pct_option);
  n2_pct_option->excludes(n2_option);
  sweep_command
      ->add_option("--normalize", normalize,
                   "kappa_normalized column: unit (raw) or pabc0 (divide by "
                   "P_abc at d = 0)")
      ->check(CLI::IsMember({"unit", "pabc0"}))
      ->capture_default_str();
  sweep_command->add_option("--out", sweep_out, "Output CSV path")
      ->capture_default_str();
  auto* manifest_option = sweep_command->add_option(
      "--manifest", manifest_in,
      "Re-run from an emitted manifest instead of flags");
  for (CLI::Option* option :
       {sweep_options.wavelength, sweep_options.slit_spacing,
        sweep_options.screen, sweep_options.source, sweep_options.sweep,
        sweep_options.d_over_D, n1_option, n1_pct_option, n2_option,
        n2_pct_option}) {
    manifest_option->excludes(option);
  }

  // verify
  auto* verify_command = app.add_subcommand(
      "verify", "Run the self-check battery and report each invariant");
  verify::Options verify_options;
  verify_command
      ->add_option("--nmax", verify_options.max_photons,
                   "Largest Fock input cross-checked against the oracle")
      ->check(CLI::Range(0, 8))
      ->capture_default_str();
  verify_command
      ->add_option("--trials", verify_options.identity_trials,
                   "Random triples in the Sorkin identity battery")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_command
      ->add_option("--seed", verify_options.seed, "Battery RNG seed")
      ->capture_default_str();
  verify_command
      ->add_option("--inject-fault", verify_options.inject_correlation_fault,
                   "Self-test hook: offset one correlation entry by this "
                   "amount so the check must fail")
      ->capture_default_str();

  // figure2
  auto* figure2_command = app.add_subcommand(
      "figure2",
      "Emit the pair of misadjusted kappa curves (n1 +1.3% vs +1.2%, both "
      "with n2 +1.3%)");
  CommonFlags figure2_flags;
  const auto figure2_options =
      add_common_options(figure2_command, figure2_flags);
  std::string figure2_prefix = "figure2";
  figure2_command
      ->add_option("--out", figure2_prefix,
                   "Output prefix; writes <prefix>_upper.csv and "
                   "<prefix>_lower.csv with manifests")
      ->capture_default_str();

  try {
    app.parse(static_cast<int>(injected.size()), injected.data());
  } catch (const CLI::ParseError& error) {
    return app.exit(error);
  }

  try {
    if (sweep_command->parsed()) {
      io::RunConfig config;
      if (manifest_option->count() > 0) {
        config = io::read_manifest(manifest_in);
      } else {
        config = config_from_common(sweep_flags, sweep_options);
        config.sorkin.n1 =
            (n1_pct_option->count() > 0) ? (1.0 / 3.0) * (1.0 + n1_pct / 100.0)
                                         : n1;
        config.sorkin.n2 =
            (n2_pct_option->count() > 0) ? (2.0 / 3.0) * (1.0 + n2_pct / 100.0)
                                         : n2;
        config.sorkin.normalizer_mode = io::normalizer_from_name(normalize);
      }
      return run_sweep(std::move(config), sweep_out);
    }
    if (verify_command->parsed()) {
      const auto report = verify::run(verify_options);
      verify::print(report, std::cout);
      return report.all_passed() ? 0 : 1;
    }
    if (figure2_command->parsed()) {
      const auto config = config_from_common(figure2_flags, figure2_options);
      return run_figure2(config, figure2_prefix);
    }
  } catch (const std::exception& error) {
    std::cerr << tool_name << ": " << error.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace trislit::cli

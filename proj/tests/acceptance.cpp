// Acceptance gate for the interferometer simulator. Each numbered check
// prints exactly one [PASS]/[FAIL] line with the measured deviation, the
// pinned tolerance, and the elapsed time; the process exits nonzero if any
// check fails. Checks 5, 7 and 8 drive the installed command line interface
// and read back the files it wrote; everything else calls the library.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "trislit/cli.hpp"
#include "trislit/csv.hpp"
#include "trislit/detection.hpp"
#include "trislit/fock_oracle.hpp"
#include "trislit/geometry.hpp"
#include "trislit/manifest.hpp"
#include "trislit/sorkin.hpp"
#include "trislit/source.hpp"

namespace fs = std::filesystem;
using trislit::NormalizerMode;
using trislit::SlitConfiguration;
using trislit::SlitGeometry;
using trislit::SorkinConfig;
using trislit::SourceState;

namespace {

struct Outcome {
  bool passed = false;
  double measured = 0.0;   // worst deviation found
  double tolerance = 0.0;  // pinned bound on the deviation
  double seconds = 0.0;
  double time_limit = 0.0;  // 0 means no pinned runtime bound
  std::string detail;       // extra context appended to the report line
};

SlitGeometry reference_geometry() {
  return SlitGeometry::three_slit(0.13, 1.25, 0.05);
}

std::vector<double> default_sweep() {
  trislit::io::SweepSpec spec;  // d/D in [-0.5, 0.5], 2001 points
  return spec.detector_coordinates(1.25);
}

int run_cli(const std::vector<std::string>& arguments) {
  std::vector<const char*> argv;
  argv.reserve(arguments.size() + 1);
  argv.push_back("trislit");
  for (const auto& argument : arguments) {
    argv.push_back(argument.c_str());
  }
  // The progress lines the tool prints would interleave with the report.
  std::ostringstream sink;
  auto* previous = std::cout.rdbuf(sink.rdbuf());
  int code = -1;
  try {
    code = trislit::cli::run(static_cast<int>(argv.size()), argv.data());
  } catch (...) {
    std::cout.rdbuf(previous);
    throw;
  }
  std::cout.rdbuf(previous);
  return code;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;  // columns[c][row]
  std::size_t rows = 0;
};

CsvTable read_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("empty csv " + path.string());
  }
  std::istringstream header(line);
  std::string field;
  while (std::getline(header, field, ',')) {
    table.header.push_back(field);
  }
  table.columns.resize(table.header.size());
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::size_t c = 0;
    while (std::getline(row, field, ',')) {
      if (c >= table.columns.size()) {
        throw std::runtime_error("ragged csv row in " + path.string());
      }
      double value = 0.0;
      const auto result =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (result.ec != std::errc{} ||
          result.ptr != field.data() + field.size()) {
        throw std::runtime_error("bad csv number \"" + field + "\" in " +
                                 path.string());
      }
      table.columns[c].push_back(value);
      ++c;
    }
    if (c != table.columns.size()) {
      throw std::runtime_error("short csv row in " + path.string());
    }
    ++table.rows;
  }
  return table;
}

std::string read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

double column_absmax(const std::vector<double>& column) {
  double out = 0.0;
  for (double value : column) {
    out = std::max(out, std::abs(value));
  }
  return out;
}

// Largest mirror defect across the columns of a symmetric-sweep table,
// relative to a per-column scale. Reflecting the screen coordinate flips the
// sign of the coordinate columns and exchanges the slit labels a <-> c, so
// P_a pairs with P_c and P_ab with P_bc while the label-symmetric columns
// map onto themselves. Value columns are scaled by max(own magnitude, P_abc
// magnitude) so that a column which is itself zero to rounding (a vanishing
// kappa curve) is judged against the probability scale of the run rather
// than its own noise.
double mirror_defect(const CsvTable& table) {
  if (table.header != std::vector<std::string>{
                          "d", "d_over_D", "P_a", "P_b", "P_c", "P_ab", "P_ac",
                          "P_bc", "P_abc", "kappa", "kappa_normalized"}) {
    throw std::runtime_error("unexpected csv header");
  }
  //                              d   d/D  P_a P_b P_c P_ab P_ac P_bc ...
  const std::size_t partner[11] = {0, 1, 4, 3, 2, 7, 6, 5, 8, 9, 10};
  const double probability_scale = column_absmax(table.columns[8]);
  double worst = 0.0;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const bool coordinate = c < 2;
    const auto& column = table.columns[c];
    const auto& mirrored_column = table.columns[partner[c]];
    double scale =
        std::max(column_absmax(column), column_absmax(mirrored_column));
    if (!coordinate) {
      scale = std::max(scale, probability_scale);
    }
    double defect = 0.0;
    for (std::size_t i = 0; i < table.rows; ++i) {
      const double mirrored = mirrored_column[table.rows - 1 - i];
      defect = std::max(defect, coordinate ? std::abs(column[i] + mirrored)
                                           : std::abs(column[i] - mirrored));
    }
    worst = std::max(worst, defect / scale);
  }
  return worst;
}

Outcome timed(double time_limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome = body();
  const auto stop = std::chrono::steady_clock::now();
  outcome.seconds = std::chrono::duration<double>(stop - start).count();
  outcome.time_limit = time_limit;
  if (time_limit > 0.0 && outcome.seconds > time_limit) {
    outcome.passed = false;
  }
  return outcome;
}

// 1. The three-way interference combination of bare amplitude triples is an
// algebraic identity: it vanishes for arbitrary complex alpha, beta, gamma.
Outcome check_identity_battery() {
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0,
                                               2.0 * 3.141592653589793);
  Outcome outcome;
  outcome.tolerance = 1e-10;
  constexpr int trials = 10000;
  for (int trial = 0; trial < trials; ++trial) {
    // uniform over the disk of radius 10
    const auto draw = [&] {
      return std::polar(10.0 * std::sqrt(unit(rng)), angle(rng));
    };
    const double residual =
        std::abs(trislit::kappa_identity(draw(), draw(), draw()));
    outcome.measured = std::max(outcome.measured, residual);
  }
  outcome.passed = outcome.measured <= outcome.tolerance;
  outcome.detail = "10000 random triples, moduli <= 10";
  return outcome;
}

// 2. Analytic slit correlations equal the brute-force ladder-operator oracle
// and the flat value <n>/N, for every Fock input and slit subset.
Outcome check_correlation_oracle() {
  Outcome outcome;
  outcome.tolerance = 1e-12;
  const std::vector<SlitConfiguration> configurations = {
      SlitConfiguration::parse("a"),  SlitConfiguration::parse("b"),
      SlitConfiguration::parse("c"),  SlitConfiguration::parse("ab"),
      SlitConfiguration::parse("ac"), SlitConfiguration::parse("bc"),
      SlitConfiguration::parse("abc")};
  for (int n = 0; n <= 4; ++n) {
    for (const auto& configuration : configurations) {
      const std::size_t open = configuration.open_count();
      const auto analytic =
          trislit::correlation_matrix(SourceState::fock(n), configuration);
      const auto state = trislit::fock::expand_fock_source(n, open);
      const double flat =
          static_cast<double>(n) / static_cast<double>(open);
      for (std::size_t i = 0; i < open; ++i) {
        for (std::size_t j = 0; j < open; ++j) {
          const auto oracle = trislit::fock::oracle_expectation(state, i, j);
          outcome.measured = std::max(
              outcome.measured, std::abs(analytic.at(i, j) - oracle));
          outcome.measured = std::max(
              outcome.measured,
              std::abs(analytic.at(i, j) - std::complex<double>{flat, 0.0}));
        }
      }
    }
  }
  outcome.passed = outcome.measured <= outcome.tolerance;
  outcome.detail = "fock n in 0..4, every slit subset";
  return outcome;
}

// 3. With the flux-adjusted coefficients 1/3 and 2/3 the combination
// vanishes across the whole sweep, relative to the all-open peak.
Outcome check_adjusted_nullity() {
  Outcome outcome;
  outcome.tolerance = 1e-12;
  const auto curve =
      trislit::kappa_curve(reference_geometry(), SourceState::fock(1),
                           SorkinConfig{}, default_sweep());
  for (const auto& point : curve) {
    outcome.measured =
        std::max(outcome.measured, std::abs(point.kappa_normalized));
  }
  outcome.passed = outcome.measured <= outcome.tolerance;
  outcome.detail = "2001 points, |kappa| / P_abc(0)";
  return outcome;
}

// 4. With the naive full-flux coefficients the combination matches an
// independently evaluated closed form pointwise and is genuinely nonzero.
Outcome check_naive_closed_form() {
  Outcome outcome;
  outcome.tolerance = 1e-12;
  const auto geometry = reference_geometry();
  const auto sweep = default_sweep();
  const SorkinConfig naive{1.0, 1.0, NormalizerMode::p_abc_at_zero};
  const auto curve =
      trislit::kappa_curve(geometry, SourceState::fock(1), naive, sweep);
  const double k = geometry.wave_number();
  double largest_ratio = 0.0;
  for (const auto& point : curve) {
    double r[3];
    for (std::size_t i = 0; i < 3; ++i) {
      r[i] = std::hypot(geometry.screen_distance(),
                        point.d - geometry.slit_position(i));
    }
    double diagonal = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      diagonal += 1.0 / (r[i] * r[i]);
    }
    double cross = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        cross += std::cos(k * (r[j] - r[i])) / (r[i] * r[j]);
      }
    }
    const double reference = (1.0 / 3.0) * (diagonal - cross);
    outcome.measured =
        std::max(outcome.measured,
                 std::abs(point.kappa - reference) / std::abs(reference));
    largest_ratio =
        std::max(largest_ratio, std::abs(point.kappa_normalized));
  }
  const bool nonzero = largest_ratio > 1e-3;
  outcome.passed = outcome.measured <= outcome.tolerance && nonzero;
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer),
                "pointwise relative; max |kappa|/P_abc(0) = %.3g (> 1e-3)",
                largest_ratio);
  outcome.detail = buffer;
  return outcome;
}

// 5. The misadjusted curve pair emitted by the command line tool: mirror
// symmetric, strictly ordered, and offset by exactly the perturbation times
// the summed one-slit probabilities.
Outcome check_misadjusted_pair(const fs::path& dir) {
  Outcome outcome;
  outcome.tolerance = 1e-12;
  const auto prefix = (dir / "fig").string();
  if (run_cli({"figure2", "--out", prefix}) != 0) {
    outcome.detail = "figure2 run failed";
    return outcome;
  }
  const auto upper = read_csv(prefix + "_upper.csv");
  const auto lower = read_csv(prefix + "_lower.csv");
  if (upper.rows != 2001 || lower.rows != 2001) {
    outcome.detail = "unexpected row count";
    return outcome;
  }
  const auto upper_manifest =
      trislit::io::read_manifest(prefix + "_upper.manifest.json");
  const auto lower_manifest =
      trislit::io::read_manifest(prefix + "_lower.manifest.json");

  // (a) both curves mirror symmetric
  const double symmetry =
      std::max(mirror_defect(upper), mirror_defect(lower));

  // (b) the +1.3% one-slit curve sits strictly above the +1.2% curve
  bool ordered = true;
  const auto& kappa_upper = upper.columns[9];
  const auto& kappa_lower = lower.columns[9];
  for (std::size_t i = 0; i < upper.rows; ++i) {
    ordered = ordered && (kappa_upper[i] > kappa_lower[i]);
  }

  // (c) affine offset: kappa difference = 0.001 * (1/3) * (P_a + P_b + P_c),
  // cross-checked against the coefficient difference the manifests declare
  const double delta_n1 = upper_manifest.sorkin.n1 - lower_manifest.sorkin.n1;
  const double nominal = 0.001 * (1.0 / 3.0);
  double affine = std::abs(delta_n1 - nominal) / nominal;
  for (std::size_t i = 0; i < upper.rows; ++i) {
    const double singles_sum =
        (lower.columns[2][i] + lower.columns[3][i]) + lower.columns[4][i];
    const double expected = nominal * singles_sum;
    affine = std::max(affine, std::abs((kappa_upper[i] - kappa_lower[i]) -
                                       expected) /
                                  expected);
  }

  outcome.measured = std::max(symmetry, affine);
  outcome.passed = ordered && outcome.measured <= outcome.tolerance;
  outcome.detail = ordered ? "symmetry + ordering + affine offset"
                           : "ordering violated";
  return outcome;
}

// 6. Fock, coherent and thermal inputs with the same mean photon number give
// the same probability and kappa curves once the mean is divided out.
Outcome check_source_independence() {
  Outcome outcome;
  outcome.tolerance = 1e-12;
  const auto geometry = reference_geometry();
  const auto sweep = default_sweep();
  const SourceState sources[] = {SourceState::parse("fock:4"),
                                 SourceState::parse("coherent:2,0"),
                                 SourceState::parse("thermal:4")};
  std::vector<std::vector<double>> normalized[3];
  for (std::size_t s = 0; s < 3; ++s) {
    const auto components =
        trislit::probability_components_curve(geometry, sources[s], sweep);
    const double mean = sources[s].mean_photon_number();
    auto& rows = normalized[s];
    rows.resize(9);
    for (const auto& point : components) {
      const double values[9] = {
          point.singles[0], point.singles[1], point.singles[2],
          point.pairs[0],   point.pairs[1],   point.pairs[2],
          point.triple,
          trislit::kappa_from_components(point, 1.0 / 3.0, 2.0 / 3.0),
          trislit::kappa_from_components(point, 1.0, 1.0)};
      for (std::size_t c = 0; c < 9; ++c) {
        rows[c].push_back(values[c] / mean);
      }
    }
  }
  for (std::size_t s = 1; s < 3; ++s) {
    for (std::size_t c = 0; c < 9; ++c) {
      for (std::size_t i = 0; i < normalized[0][c].size(); ++i) {
        outcome.measured =
            std::max(outcome.measured,
                     std::abs(normalized[s][c][i] - normalized[0][c][i]));
      }
    }
  }
  outcome.passed = outcome.measured <= outcome.tolerance;
  outcome.detail = "fock:4 vs coherent:2,0 vs thermal:4, curves / <n>";
  return outcome;
}

// 7. Every curve the tool emitted on the symmetric sweep is mirror
// symmetric: coordinate columns antisymmetric, value columns symmetric.
Outcome check_mirror_symmetry(const fs::path& dir) {
  Outcome outcome;
  outcome.tolerance = 1e-12;
  if (run_cli({"sweep", "--out", (dir / "adjusted.csv").string()}) != 0 ||
      run_cli({"sweep", "--n1", "1", "--n2", "1", "--out",
               (dir / "naive.csv").string()}) != 0) {
    outcome.detail = "sweep run failed";
    return outcome;
  }
  const fs::path tables[] = {dir / "adjusted.csv", dir / "naive.csv",
                             dir / "fig_upper.csv", dir / "fig_lower.csv"};
  for (const auto& path : tables) {
    outcome.measured = std::max(outcome.measured, mirror_defect(read_csv(path)));
  }
  outcome.passed = outcome.measured <= outcome.tolerance;
  outcome.detail = "4 emitted curves, a<->c relabeling, column-scale relative";
  return outcome;
}

// 8. Re-running from the emitted manifest reproduces the output files byte
// for byte.
Outcome check_determinism(const fs::path& dir) {
  Outcome outcome;
  outcome.tolerance = 0.0;
  const auto first_csv = dir / "repro.csv";
  if (run_cli({"sweep", "--source", "thermal:2.5", "--n1-pct", "1.3",
               "--out", first_csv.string()}) != 0) {
    outcome.detail = "first run failed";
    return outcome;
  }
  const auto manifest = dir / "repro.manifest.json";
  const auto second_csv = dir / "repro_again.csv";
  if (run_cli({"sweep", "--manifest", manifest.string(), "--out",
               second_csv.string()}) != 0) {
    outcome.detail = "manifest rerun failed";
    return outcome;
  }
  const bool csv_identical = read_bytes(first_csv) == read_bytes(second_csv);
  const bool manifest_identical =
      read_bytes(manifest) == read_bytes(dir / "repro_again.manifest.json");
  outcome.measured = (csv_identical && manifest_identical) ? 0.0 : 1.0;
  outcome.passed = csv_identical && manifest_identical;
  outcome.detail = "byte-compare csv and manifest across a manifest rerun";
  return outcome;
}

void report(int index, const char* name, const Outcome& outcome) {
  char measured[32];
  std::snprintf(measured, sizeof(measured), "%.3g", outcome.measured);
  char tolerance[32];
  std::snprintf(tolerance, sizeof(tolerance), "%.3g", outcome.tolerance);
  char timing[64];
  if (outcome.time_limit > 0.0) {
    std::snprintf(timing, sizeof(timing), "%.3f s (limit %.0f s)",
                  outcome.seconds, outcome.time_limit);
  } else {
    std::snprintf(timing, sizeof(timing), "%.3f s", outcome.seconds);
  }
  std::printf("[%s] %d. %-38s deviation %-9s tol %-9s %s%s%s\n",
              outcome.passed ? "PASS" : "FAIL", index, name, measured,
              tolerance, timing, outcome.detail.empty() ? "" : " | ",
              outcome.detail.c_str());
}

}  // namespace

int main() {
  const auto dir = fs::temp_directory_path() / "trislit-acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  struct Check {
    const char* name;
    double time_limit;
    std::function<Outcome()> body;
  };
  const Check checks[] = {
      {"amplitude-triple identity battery", 1.0, check_identity_battery},
      {"correlations vs ladder oracle", 5.0, check_correlation_oracle},
      {"flux-adjusted combination vanishes", 1.0, check_adjusted_nullity},
      {"full-flux combination, closed form", 1.0, check_naive_closed_form},
      {"misadjusted curve pair via cli", 0.0,
       [&dir] { return check_misadjusted_pair(dir); }},
      {"source-state independence", 2.0, check_source_independence},
      {"mirror symmetry of emitted curves", 0.0,
       [&dir] { return check_mirror_symmetry(dir); }},
      {"manifest-driven determinism", 0.0,
       [&dir] { return check_determinism(dir); }},
  };

  int failures = 0;
  int index = 1;
  for (const auto& check : checks) {
    Outcome outcome;
    try {
      outcome = timed(check.time_limit, check.body);
    } catch (const std::exception& error) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + error.what();
    }
    report(index, check.name, outcome);
    failures += outcome.passed ? 0 : 1;
    ++index;
  }
  if (failures == 0) {
    std::printf("acceptance: all 8 checks passed\n");
  } else {
    std::printf("acceptance: %d of 8 checks FAILED\n", failures);
  }
  return failures;
}

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "urnlab/limit_laws.hpp"

namespace urnlab::harness {

/// Malformed flags or configuration; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Report or config file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Suite { profile, moments, couplings, asymptotics, all };
enum class Format { csv, json };

std::string_view to_string(Suite s) noexcept;
std::string_view to_string(Format f) noexcept;
Suite parse_suite(std::string_view name);
Format parse_format(std::string_view name);

/// Window coordinates. An explicit `values` list wins over the evenly spaced
/// min..max grid with `steps` points.
struct ThetaGrid {
  double min = -2.0;
  double max = 2.0;
  std::size_t steps = 9;
  std::optional<std::vector<double>> values =
      std::vector<double>{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};

  std::vector<double> points() const;
};

struct ExperimentConfig {
  Suite suite = Suite::all;
  /// Absent: the regime's default ladder. Present but empty: nothing to run.
  std::optional<std::vector<std::int64_t>> n_ladder;
  RegimeSpec regime = RegimeSpec::large();
  /// Forces k for every n of the ladder instead of the regime's choice.
  std::optional<std::int64_t> k;
  ThetaGrid theta;
  std::uint64_t seed = 20240917;
  std::uint64_t samples = 100000;
  unsigned threads = 1;
  /// Check thresholds and frozen goldens, keyed like "profile.max_gap".
  std::map<std::string, double> tolerances;
  std::optional<std::filesystem::path> output;
  Format format = Format::csv;

  /// Throws UsageError for an unknown key.
  double tolerance(const std::string& key) const;
  /// Throws UsageError when an invariant is broken.
  void validate() const;
};

/// Ladder used when the config names none.
std::vector<std::int64_t> default_ladder(RegimeKind kind);

/// Defaults plus the tolerances compiled in from config/tolerances.json.
ExperimentConfig default_config();

/// Thresholds and goldens as shipped, with their source notes.
const nlohmann::json& embedded_tolerance_file();

/// Overlays the fields present in `j` onto `cfg`. Unknown keys, wrong types
/// and unknown tolerance names throw UsageError.
void apply_json(ExperimentConfig& cfg, const nlohmann::json& j);

ExperimentConfig load_config_file(const ExperimentConfig& base,
                                  const std::filesystem::path& path);

nlohmann::json to_json(const ExperimentConfig& cfg);

}  // namespace urnlab::harness

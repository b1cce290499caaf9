#include "urnlab/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "embedded_tolerances.hpp"

namespace urnlab::harness {

using nlohmann::json;

std::string_view to_string(Suite s) noexcept {
  switch (s) {
    case Suite::profile: return "profile";
    case Suite::moments: return "moments";
    case Suite::couplings: return "couplings";
    case Suite::asymptotics: return "asymptotics";
    case Suite::all: return "all";
  }
  return "all";
}

std::string_view to_string(Format f) noexcept {
  return f == Format::csv ? "csv" : "json";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::profile, Suite::moments, Suite::couplings, Suite::asymptotics,
                  Suite::all})
    if (name == to_string(s)) return s;
  throw UsageError("unknown suite '" + std::string(name) + "'");
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw UsageError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

std::vector<double> ThetaGrid::points() const {
  if (values) return *values;
  std::vector<double> out;
  if (steps == 1) {
    out.push_back(min);
    return out;
  }
  for (std::size_t i = 0; i < steps; ++i)
    out.push_back(min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1));
  return out;
}

double ExperimentConfig::tolerance(const std::string& key) const {
  auto it = tolerances.find(key);
  if (it == tolerances.end()) throw UsageError("no tolerance named '" + key + "'");
  return it->second;
}

void ExperimentConfig::validate() const {
  const auto grid = theta.points();
  if (grid.empty()) throw UsageError("theta grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw UsageError("theta grid has a non-finite point");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw UsageError("theta grid must be strictly increasing");
  }
  if (!theta.values && theta.steps == 0) throw UsageError("theta steps must be >= 1");
  if (n_ladder) {
    for (std::size_t i = 0; i < n_ladder->size(); ++i) {
      if ((*n_ladder)[i] < 2) throw UsageError("n values must be >= 2");
      if (i > 0 && (*n_ladder)[i] <= (*n_ladder)[i - 1])
        throw UsageError("n ladder must be strictly increasing");
    }
  }
  if (k && *k < 1) throw UsageError("k must be >= 1");
  if (samples == 0) throw UsageError("samples must be >= 1");
  if (threads == 0) throw UsageError("threads must be >= 1");
  for (const auto& [key, value] : tolerances)
    if (!(value >= 0.0) || !std::isfinite(value))
      throw UsageError("tolerance '" + key + "' must be finite and non-negative");
}

std::vector<std::int64_t> default_ladder(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::large: return {512, 2048, 8192};
    case RegimeKind::critical: return {10000, 100000, 1000000};
    case RegimeKind::small: return {10000, 100000, 1000000};
  }
  return {};
}

const json& embedded_tolerance_file() {
  static const json file = json::parse(detail::kTolerancesJson);
  return file;
}

ExperimentConfig default_config() {
  ExperimentConfig cfg;
  const json& file = embedded_tolerance_file();
  for (const char* section : {"tolerances", "goldens"})
    for (const auto& [key, entry] : file.at(section).items())
      cfg.tolerances[key] = entry.at("value").get<double>();
  return cfg;
}

namespace {

template <typename T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("config field '") + key + "': " + e.what());
  }
}

void check_keys(const json& j, std::initializer_list<std::string_view> allowed,
                std::string_view where) {
  if (!j.is_object()) throw UsageError(std::string(where) + " must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) throw UsageError("unknown config key '" + key + "' in " + std::string(where));
  }
}

}  // namespace

void apply_json(ExperimentConfig& cfg, const json& j) {
  check_keys(j,
             {"suite", "n_ladder", "regime", "alpha", "time_form", "k", "theta", "seed",
              "samples", "threads", "tolerances", "output", "format"},
             "config");
  if (j.contains("suite")) cfg.suite = parse_suite(field<std::string>(j, "suite"));
  if (j.contains("n_ladder")) {
    if (j.at("n_ladder").is_null()) cfg.n_ladder.reset();
    else cfg.n_ladder = field<std::vector<std::int64_t>>(j, "n_ladder");
  }
  if (j.contains("regime") || j.contains("alpha") || j.contains("time_form")) {
    RegimeKind kind = cfg.regime.kind();
    double alpha = cfg.regime.alpha().value_or(1.0);
    TimeForm form = cfg.regime.time_form();
    try {
      if (j.contains("regime")) kind = parse_regime_kind(field<std::string>(j, "regime"));
      if (j.contains("alpha")) alpha = field<double>(j, "alpha");
      if (j.contains("time_form")) form = parse_time_form(field<std::string>(j, "time_form"));
      cfg.regime = kind == RegimeKind::large   ? RegimeSpec::large()
                   : kind == RegimeKind::small ? RegimeSpec::small()
                                               : RegimeSpec::critical(alpha, form);
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(std::string("regime: ") + e.what());
    }
  }
  if (j.contains("k")) {
    if (j.at("k").is_null()) cfg.k.reset();
    else cfg.k = field<std::int64_t>(j, "k");
  }
  if (j.contains("theta")) {
    const json& t = j.at("theta");
    check_keys(t, {"min", "max", "steps", "values"}, "theta");
    if (t.contains("values")) {
      cfg.theta.values = field<std::vector<double>>(t, "values");
    } else if (t.contains("min") || t.contains("max") || t.contains("steps")) {
      cfg.theta.values.reset();
    }
    if (t.contains("min")) cfg.theta.min = field<double>(t, "min");
    if (t.contains("max")) cfg.theta.max = field<double>(t, "max");
    if (t.contains("steps")) cfg.theta.steps = field<std::size_t>(t, "steps");
  }
  if (j.contains("seed")) cfg.seed = field<std::uint64_t>(j, "seed");
  if (j.contains("samples")) cfg.samples = field<std::uint64_t>(j, "samples");
  if (j.contains("threads")) cfg.threads = field<unsigned>(j, "threads");
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    if (!t.is_object()) throw UsageError("tolerances must be a JSON object");
    for (const auto& [key, value] : t.items()) {
      if (!cfg.tolerances.count(key)) throw UsageError("unknown tolerance '" + key + "'");
      if (!value.is_number()) throw UsageError("tolerance '" + key + "' must be a number");
      cfg.tolerances[key] = value.get<double>();
    }
  }
  if (j.contains("output")) {
    if (j.at("output").is_null()) cfg.output.reset();
    else cfg.output = field<std::string>(j, "output");
  }
  if (j.contains("format")) cfg.format = parse_format(field<std::string>(j, "format"));
}

ExperimentConfig load_config_file(const ExperimentConfig& base,
                                  const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw UsageError("config file " + path.string() + ": " + e.what());
  }
  ExperimentConfig cfg = base;
  apply_json(cfg, j);
  return cfg;
}

json to_json(const ExperimentConfig& cfg) {
  json j;
  j["suite"] = to_string(cfg.suite);
  j["n_ladder"] = cfg.n_ladder ? json(*cfg.n_ladder) : json(nullptr);
  j["regime"] = to_string(cfg.regime.kind());
  if (cfg.regime.alpha()) {
    j["alpha"] = *cfg.regime.alpha();
    j["time_form"] = to_string(cfg.regime.time_form());
  }
  j["k"] = cfg.k ? json(*cfg.k) : json(nullptr);
  json theta;
  if (cfg.theta.values) {
    theta["values"] = *cfg.theta.values;
  } else {
    theta["min"] = cfg.theta.min;
    theta["max"] = cfg.theta.max;
    theta["steps"] = cfg.theta.steps;
  }
  j["theta"] = theta;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["threads"] = cfg.threads;
  j["tolerances"] = cfg.tolerances;
  j["output"] = cfg.output ? json(cfg.output->string()) : json(nullptr);
  j["format"] = to_string(cfg.format);
  return j;
}

}  // namespace urnlab::harness

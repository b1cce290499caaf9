#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "urnlab/errors.hpp"
#include "urnlab/harness/config.hpp"
#include "urnlab/harness/report.hpp"
#include "urnlab/harness/suites.hpp"

namespace {

using namespace urnlab::harness;

enum ExitCode { kPass = 0, kCheckFailure = 1, kUsage = 2, kNumeric = 3 };

struct Flags {
  std::optional<std::string> config;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
  std::optional<std::string> regime;
  std::optional<double> alpha;
  std::optional<std::string> time_form;
  std::optional<double> theta_min;
  std::optional<double> theta_max;
  std::optional<std::size_t> theta_steps;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<unsigned> threads;
  std::optional<std::string> out;
  std::optional<std::string> format;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON config file; flags override its values");
  cmd->add_option("--n", f.n, "Single population size instead of the default ladder");
  cmd->add_option("--k", f.k, "Red balls; defaults to the regime's choice for each n");
  cmd->add_option("--regime", f.regime, "large | critical | small");
  cmd->add_option("--alpha", f.alpha, "k^2/n for the critical regime");
  cmd->add_option("--time-form", f.time_form, "quarter-log-n | half-log-k");
  cmd->add_option("--theta-min", f.theta_min, "Smallest window coordinate");
  cmd->add_option("--theta-max", f.theta_max, "Largest window coordinate");
  cmd->add_option("--theta-steps", f.theta_steps, "Number of evenly spaced window points");
  cmd->add_option("--seed", f.seed, "64-bit seed for every random stream");
  cmd->add_option("--samples", f.samples, "Monte Carlo sample count");
  cmd->add_option("--threads", f.threads, "Worker threads; results do not depend on it");
  cmd->add_option("--out", f.out, "Report path; stdout when absent");
  cmd->add_option("--format", f.format, "csv | json");
}

ExperimentConfig build_config(Suite suite, const Flags& f) {
  ExperimentConfig cfg = default_config();
  cfg.suite = suite;
  if (f.config) cfg = load_config_file(cfg, *f.config);
  if (suite != Suite::all) cfg.suite = suite;

  nlohmann::json overrides = nlohmann::json::object();
  if (f.regime) overrides["regime"] = *f.regime;
  if (f.alpha) overrides["alpha"] = *f.alpha;
  if (f.time_form) overrides["time_form"] = *f.time_form;
  if (f.format) overrides["format"] = *f.format;
  apply_json(cfg, overrides);

  if (f.n) cfg.n_ladder = std::vector<std::int64_t>{*f.n};
  if (f.k) cfg.k = *f.k;
  if (f.theta_min || f.theta_max || f.theta_steps) {
    if (cfg.theta.values) {
      cfg.theta.min = cfg.theta.values->front();
      cfg.theta.max = cfg.theta.values->back();
      cfg.theta.values.reset();
    }
    if (f.theta_min) cfg.theta.min = *f.theta_min;
    if (f.theta_max) cfg.theta.max = *f.theta_max;
    if (f.theta_steps) cfg.theta.steps = *f.theta_steps;
  }
  if (f.seed) cfg.seed = *f.seed;
  if (f.samples) cfg.samples = *f.samples;
  if (f.threads) cfg.threads = *f.threads;
  if (f.out) cfg.output = *f.out;
  cfg.validate();
  return cfg;
}

int run(const ExperimentConfig& cfg) {
  SuiteResult result = run_configured(cfg);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
  canonical_sort(result.rows);

  const std::string text =
      cfg.format == Format::csv ? to_csv(result.rows) : to_json_text(result.rows);
  if (cfg.output) {
    write_atomic(*cfg.output, text);
    auto sidecar = *cfg.output;
    sidecar += ".config.json";
    write_atomic(sidecar, to_json(cfg).dump(2) + "\n");
  } else {
    std::cout << text;
  }

  std::size_t failed = 0;
  for (const auto& r : result.rows) {
    if (r.passed) continue;
    ++failed;
    std::cerr << "FAIL " << r.suite << '/' << r.label << " n=" << r.n << " k=" << r.k
              << " value=" << r.value << " tolerance=" << r.tolerance << '\n';
  }
  std::cerr << result.rows.size() << " checks, " << failed << " failed\n";
  return exit_status(result.rows) == 0 ? kPass : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification runs for the Bernoulli-Laplace urn chain"};
  app.require_subcommand(1);
  Flags flags;
  std::optional<Suite> chosen;
  const std::pair<const char*, Suite> commands[] = {
      {"profile", Suite::profile},
      {"moments", Suite::moments},
      {"couplings", Suite::couplings},
      {"asymptotics", Suite::asymptotics},
      {"verify", Suite::all},
  };
  const char* help[] = {
      "Exact TV against the limit profile along a theta grid",
      "Moments, rate identities and stationarity",
      "Order preservation and coalescence of the basic coupling",
      "Scaling limits, concentration and hitting times",
      "Every suite; exit 0 iff every check passes",
  };
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* cmd = app.add_subcommand(commands[i].first, help[i]);
    add_flags(cmd, flags);
    const Suite s = commands[i].second;
    cmd->callback([&chosen, s] { chosen = s; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run(build_config(*chosen, flags));
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kUsage;
  } catch (const urnlab::numeric_integrity_error& e) {
    std::cerr << "numeric integrity error: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}

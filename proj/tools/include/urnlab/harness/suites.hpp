#pragma once

#include <string>
#include <vector>

#include "urnlab/harness/config.hpp"
#include "urnlab/harness/report.hpp"

namespace urnlab::harness {

struct SuiteResult {
  std::vector<ReportRow> rows;
  std::vector<std::string> warnings;

  void append(SuiteResult other);
};

/// Cutoff profiles for each listed regime. The config's regime uses the
/// config's ladder, k and theta grid; any other regime uses its own default
/// ladder. One row per (n, theta), a max-gap row per n when the grid has
/// several points, and a strict-decrease row when the ladder has several n.
SuiteResult run_profile_suite(const ExperimentConfig& cfg,
                              const std::vector<RegimeSpec>& regimes);

/// Closed-form moments against exact evolution, path-sampled moments,
/// the rate identities and stationarity of the hypergeometric law.
SuiteResult run_moments_suite(const ExperimentConfig& cfg);

/// Order preservation, agreement after meeting and the coalesced fraction
/// of the basic coupling.
SuiteResult run_couplings_suite(const ExperimentConfig& cfg);

/// OU marginal, Gaussian equilibrium, queue rates, M/M/inf law,
/// cross-regime consistency, concentration, hitting times and exponential
/// sums.
SuiteResult run_asymptotics_suite(const ExperimentConfig& cfg);

/// Equality of the two critical time parameterizations after the shift
/// theta -> theta - 1/4 log alpha.
SuiteResult run_reparameterization_check(const ExperimentConfig& cfg);

/// Every suite, with the profile suite over all three regimes.
SuiteResult run_verify_all(const ExperimentConfig& cfg);

/// Dispatches on cfg.suite; Suite::all is run_verify_all.
SuiteResult run_configured(const ExperimentConfig& cfg);

}  // namespace urnlab::harness

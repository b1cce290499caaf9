#pragma once

// Exact-event simulation of the urn chain: single paths, the basic coupling of
// two copies, hitting times of 0, and the exponential sums that approximate
// them when k is small.

#include <cstdint>
#include <optional>
#include <vector>

#include "urnlab/chain_model.hpp"
#include "urnlab/pmf.hpp"
#include "urnlab/rng.hpp"

namespace urnlab {

/// Event list of one path. states[i] is the state entered at times[i].
struct Trajectory {
  std::int64_t x0 = 0;
  double horizon = 0.0;
  std::vector<double> times;
  std::vector<std::int64_t> states;

  /// State occupied at time t in [0, horizon].
  std::int64_t state_at(double t) const;
  std::int64_t final_state() const noexcept {
    return states.empty() ? x0 : states.back();
  }
};

/// Exact-event simulation up to `horizon`: from x, wait Exp(total_rate(x)),
/// then step up with probability birth_rate/total_rate, else down.
/// Throws std::domain_error for horizon < 0 or x0 outside [0, k].
Trajectory sample_path(const ChainParams& p, std::int64_t x0, double horizon,
                       RngStream& rng);

/// X_t only, without storing the path.
std::int64_t sample_state_at(const ChainParams& p, std::int64_t x0, double t,
                             RngStream& rng);

struct CouplingOutcome {
  /// First meeting time, or nullopt if the copies are still apart at horizon.
  std::optional<double> coalescence_time;
  /// Set when copies started ordered (x0 <= y0) and that order was ever broken.
  bool order_violated = false;
  /// Extremes over both copies during the run.
  std::int64_t min_state = 0;
  std::int64_t max_state = 0;
  std::int64_t events = 0;
};

/// Basic coupling: apart, each copy runs its own clock; together, one shared
/// clock drives both. Coupled copies stay equal once they meet, so the run
/// stops at the meeting time.
CouplingOutcome run_coupled(const ChainParams& p, std::int64_t x0,
                            std::int64_t y0, double horizon, RngStream& rng);

/// The same coupling with both paths recorded to the horizon on a shared
/// event grid (a step of either copy appends one entry to both).
struct CoupledPaths {
  std::vector<double> times;
  std::vector<std::int64_t> first;
  std::vector<std::int64_t> second;
};

CoupledPaths sample_coupled_paths(const ChainParams& p, std::int64_t x0,
                                  std::int64_t y0, double horizon,
                                  RngStream& rng);

/// inf{t >= 0 : X_t = 0} starting from x0. Always finite; runs until the hit.
double hitting_time_zero(const ChainParams& p, std::int64_t x0, RngStream& rng);

/// One draw of S_{x,y} = sum_{z=y+1}^{x} T_z with independent T_z ~ Exp(z).
/// Throws std::domain_error unless 0 <= y < x.
double exp_sum_sample(std::int64_t x, std::int64_t y, RngStream& rng);

/// Histogram of X_t over `samples` independent paths; path i uses
/// rng.substream(i). Throws std::invalid_argument if samples == 0.
Pmf empirical_pmf(const ChainParams& p, std::int64_t x0, double t,
                  std::uint64_t samples, const RngStream& rng,
                  unsigned workers = 1);

}  // namespace urnlab

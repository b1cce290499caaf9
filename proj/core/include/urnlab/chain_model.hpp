#pragma once

// The Bernoulli-Laplace urn: n balls, k of them red, k slots in the first urn.
// At rate 1 a uniformly chosen pair of balls swaps urns; X_t counts the red
// balls in the first urn, a birth-death chain on {0, ..., k}.

#include <cstdint>

#include "urnlab/pmf.hpp"

namespace urnlab {

/// Urn instance (n, k) with 1 <= k <= floor(n/2). kappa is always derived.
class ChainParams {
 public:
  /// Throws std::domain_error unless n >= 2 and 1 <= k <= n/2.
  ChainParams(std::int64_t n, std::int64_t k);

  std::int64_t n() const noexcept { return n_; }
  std::int64_t k() const noexcept { return k_; }
  double kappa() const noexcept {
    return static_cast<double>(k_) / static_cast<double>(n_);
  }
  /// Stationary mean k^2/n.
  double center() const noexcept {
    return static_cast<double>(k_) * static_cast<double>(k_) /
           static_cast<double>(n_);
  }
  /// Number of states, k + 1.
  std::int64_t num_states() const noexcept { return k_ + 1; }
  bool contains(std::int64_t x) const noexcept { return x >= 0 && x <= k_; }

  bool operator==(const ChainParams&) const = default;

 private:
  std::int64_t n_;
  std::int64_t k_;
};

// Transition rates. All throw std::domain_error for x outside [0, k].
double birth_rate(const ChainParams& p, std::int64_t x);
double death_rate(const ChainParams& p, std::int64_t x);
double total_rate(const ChainParams& p, std::int64_t x);
/// max_x total_rate(x), the uniformization rate used by the exact engine.
double max_total_rate(const ChainParams& p);

/// Hypergeometric HG(n, k, k) law on [0, k].
Pmf stationary_pmf(const ChainParams& p);

/// Stationary variance k^2 (n-k)^2 / (n^2 (n-1)).
double stationary_variance(const ChainParams& p);

/// E_x0[X_t] = k^2/n + (x0 - k^2/n) e^{-2t/n}. Throws std::domain_error for
/// t < 0 or x0 outside [0, k].
double mean_at(const ChainParams& p, std::int64_t x0, double t);

/// Var_x0[X_t], exact closed form obtained from the generator applied to the
/// recentred square. Same preconditions as mean_at.
double variance_at(const ChainParams& p, std::int64_t x0, double t);

enum class WindowKind { minus, plus };

/// Burn-in time at which the mean sits C fluctuation units from equilibrium.
///   minus: n/2 log(k/C),        requires 0 < C <= k
///   plus:  n/4 log n - n/2 log C, requires 0 < C <= sqrt(n)
struct WindowTime {
  WindowKind kind;
  double scale;  // C
  double t;
};

WindowTime window_time(const ChainParams& p, WindowKind kind, double scale);

}  // namespace urnlab

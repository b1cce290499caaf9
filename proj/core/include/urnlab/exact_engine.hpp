#pragma once

// Exact time-t law of the urn chain by uniformization of its tridiagonal
// generator, plus total-variation utilities built on it.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "urnlab/chain_model.hpp"
#include "urnlab/limit_laws.hpp"
#include "urnlab/pmf.hpp"

namespace urnlab {

struct EvolveOptions {
  /// L1 budget for the discarded Poisson tail; must lie in (0, 1e-6].
  double truncation_eps = 1e-12;
  /// Overrides the uniformization rate. Must dominate every exit rate.
  std::optional<double> uniformization_rate;
};

/// P(X_t in .) for X_0 ~ initial, with L1 error at most opts.truncation_eps.
///
/// Throws std::invalid_argument if `initial` has mass outside [0, k] or the
/// options are malformed, std::domain_error if t < 0, and
/// numeric_integrity_error if the result is not a finite probability vector.
Pmf evolve(const ChainParams& p, const Pmf& initial, double t,
           const EvolveOptions& opts = {});

/// Half the L1 distance between two laws on the integers. Supports are aligned
/// by state index.
double tv_distance(const Pmf& a, const Pmf& b);

/// TV between two probability vectors indexed identically. Throws
/// std::invalid_argument when the lengths differ.
double tv_distance(std::span<const double> a, std::span<const double> b);

/// ||P_x0(X_t in .) - pi||_TV.
double tv_to_equilibrium(const ChainParams& p, std::int64_t x0, double t,
                         const EvolveOptions& opts = {});

struct WorstCaseTv {
  double tv;
  std::int64_t start;
};

/// max over every start state of tv_to_equilibrium. O(k) evolutions: meant for
/// small chains, to record whether the start k is the extremal one.
WorstCaseTv worst_case_tv(const ChainParams& p, double t,
                          const EvolveOptions& opts = {});

/// (Qf)(x) = b(x)(f(x+1) - f(x)) + d(x)(f(x-1) - f(x)).
/// Throws std::invalid_argument unless f has k + 1 entries.
std::vector<double> apply_generator(const ChainParams& p,
                                    std::span<const double> f);

/// One point of a cutoff-profile experiment.
struct ProfilePoint {
  double theta;
  double t;
  double tv_exact;
  double tv_limit;
  double gap;  // |tv_exact - tv_limit|
};

struct ProfileCurve {
  std::vector<ProfilePoint> points;
  /// Skipped grid points (negative times) and regime/k mismatches.
  std::vector<std::string> warnings;
};

/// Chain time at window coordinate theta for the regime's time form:
/// quarter-log-n gives n/4 log n + theta n, half-log-k gives n/2 log k + theta n.
double profile_time(const ChainParams& p, const RegimeSpec& regime,
                    double theta);

/// Exact TV from the start k against the regime's limit profile along a theta
/// grid. The grid is evaluated in increasing order, each law evolved from the
/// previous one; points with negative time are skipped with a warning.
ProfileCurve profile_curve(const ChainParams& p, const RegimeSpec& regime,
                           std::span<const double> thetas,
                           const EvolveOptions& opts = {});

}  // namespace urnlab

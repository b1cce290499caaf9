#pragma once

// Finite-n measurements of each scaling approximation: the Ornstein-Uhlenbeck
// limit for k >> sqrt(n), the M/M/inf queue for k ~ sqrt(n), the Gaussian
// equilibrium and the burn-in concentration.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "urnlab/chain_model.hpp"
#include "urnlab/exact_engine.hpp"
#include "urnlab/limit_laws.hpp"
#include "urnlab/rng.hpp"

namespace urnlab {

enum class Statistic { tv, kolmogorov, ratio_gap, probability };

std::string_view to_string(Statistic s) noexcept;

/// One measured discrepancy and its verdict; passed == (value <= tolerance).
struct DiscrepancyReport {
  std::string label;
  std::int64_t n = 0;
  std::int64_t k = 0;
  Statistic statistic = Statistic::tv;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;

  static DiscrepancyReport make(std::string label, const ChainParams& p,
                                Statistic statistic, double value,
                                double tolerance);
};

/// (x - k^2/n) / (sqrt(n) kappa (1 - kappa)).
double rescale_state(const ChainParams& p, std::int64_t x);

/// Width of one lattice cell after rescaling, 1 / (sqrt(n) kappa (1 - kappa)).
double rescaled_cell_width(const ChainParams& p);

/// Time-s marginal of dD = -2D ds + 2 dB from D_0 = z:
/// N(z e^{-2s}, 1 - e^{-4s}). Throws std::domain_error for s < 0.
GaussianLaw ou_marginal(double z, double s);

/// Start state for a rescaled position z: the integer nearest
/// k^2/n + z sqrt(n) kappa (1 - kappa). Throws std::domain_error when it falls
/// outside [0, k].
std::int64_t ou_start_state(const ChainParams& p, double z);

/// TV between the exact law of (X_{ns} - k^2/n)/c_n from the lattice start
/// nearest z, and the OU marginal from that start's rescaled position,
/// integrated over the lattice cells. Gaussian mass outside the lattice counts
/// fully toward the distance.
DiscrepancyReport ou_discrepancy(const ChainParams& p, double z, double s,
                                 double tolerance,
                                 const EvolveOptions& opts = {});

/// Kolmogorov distance between the rescaled HG(n, k, k) CDF and Phi, taking
/// the supremum on both sides of every jump.
DiscrepancyReport equilibrium_gaussian_gap(const ChainParams& p,
                                           double tolerance);

struct QueueRateGap {
  double up;
  /// Absent at x = 0, where the queue's service rate vanishes.
  std::optional<double> down;
};

/// |n b(x) / (2 alpha) - 1| and |n d(x) / (2x) - 1|.
/// Throws std::domain_error unless alpha > 0.
QueueRateGap queue_rate_gap(const ChainParams& p, std::int64_t x, double alpha);

/// Queue time s = 1/2 log C + theta at which the burn-in from T^-(C) reaches
/// the window coordinate theta.
double mminf_queue_time(double scale, double theta);

/// TV between the chain evolved for n s from x0 and the M/M/inf law
/// Bin(x0, e^{-2s}) + Pois(alpha (1 - e^{-2s})) with alpha = k^2/n,
/// s = mminf_queue_time(C, theta). Throws std::domain_error if s < 0.
DiscrepancyReport mminf_discrepancy(const ChainParams& p, std::int64_t x0,
                                    double theta, double scale,
                                    double tolerance,
                                    const EvolveOptions& opts = {});

/// Chebyshev envelope (1 + C) / (eps^2 C^2) of the concentration bound.
double chebyshev_envelope(double scale, double eps);

/// Chains with more states than this are estimated by Monte Carlo in
/// concentration_report instead of exact evolution.
inline constexpr std::int64_t kExactConcentrationMaxStates = 20001;

/// P_k(|X_T - center| > band) at T = window_time(kind, C), where
///   plus:  center = k^2/n + C kappa (1 - kappa) sqrt(n), band = eps C kappa sqrt(n)
///   minus: center = C,                                 band = eps C.
/// Exact for small state spaces, otherwise the fraction over `samples` paths
/// (path i uses rng.substream(i)).
DiscrepancyReport concentration_report(const ChainParams& p, double scale,
                                       double eps, WindowKind kind,
                                       std::uint64_t samples,
                                       const RngStream& rng, double tolerance,
                                       unsigned workers = 1);

}  // namespace urnlab

#pragma once

#include <cstdint>
#include <vector>

namespace urnlab {

/// Poisson(lambda) weights on a contiguous index window [first, first + size)
/// whose excluded mass is provably at most `eps`.
///
/// Weights are generated outward from the mode by the ratio recursion, so they
/// neither underflow nor overflow for lambda up to ~1e12. Tails are bounded by
/// the geometric series the ratio recursion dominates:
///   right: sum_{j>R} w_j <= w_{R+1} / (1 - lambda/(R+2))
///   left:  sum_{j<L} w_j <= w_{L-1} / (1 - (L-1)/lambda)
/// The left side is truncated only when lambda > kLeftTruncationThreshold.
///
/// The stored weights are renormalized to unit sum. Since the ratio recursion
/// is exact up to rounding, this cancels the error of the single log-gamma
/// evaluation at the mode; the L1 distance to the true law is then at most
/// 2 * tail_bound.
struct PoissonWindow {
  static constexpr double kLeftTruncationThreshold = 50.0;

  std::int64_t first = 0;
  std::vector<double> weights;
  /// Upper bound on the probability mass outside the window.
  double tail_bound = 0.0;

  std::int64_t last() const noexcept {
    return first + static_cast<std::int64_t>(weights.size()) - 1;
  }
};

/// Throws std::domain_error if lambda < 0 or eps is not in (0, 1).
PoissonWindow poisson_window(double lambda, double eps);

/// log P(Pois(lambda) = j); -inf where the mass is zero.
double poisson_log_pmf(std::int64_t j, double lambda);

}  // namespace urnlab

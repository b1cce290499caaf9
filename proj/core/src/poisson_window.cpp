#include "urnlab/poisson_window.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace urnlab {

double poisson_log_pmf(std::int64_t j, double lambda) {
  if (j < 0) return -std::numeric_limits<double>::infinity();
  if (lambda == 0.0)
    return j == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  const double jd = static_cast<double>(j);
  return jd * std::log(lambda) - lambda - boost::math::lgamma(jd + 1.0);
}

PoissonWindow poisson_window(double lambda, double eps) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw std::domain_error("poisson_window: rate must be finite and >= 0");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::domain_error("poisson_window: eps must lie in (0, 1)");

  PoissonWindow win;
  if (lambda == 0.0) {
    win.weights = {1.0};
    return win;
  }

  const auto mode = static_cast<std::int64_t>(std::floor(lambda));
  const double w_mode = std::exp(poisson_log_pmf(mode, lambda));
  const double half = 0.5 * eps;

  std::deque<double> w{w_mode};
  double right_bound = 0.0;
  // Right: extend R until the geometric bound on sum_{j>R} w_j is within budget.
  for (std::int64_t r = mode;; ++r) {
    const double next = w.back() * lambda / static_cast<double>(r + 1);
    const double ratio = lambda / static_cast<double>(r + 2);
    right_bound = ratio < 1.0 ? next / (1.0 - ratio)
                              : std::numeric_limits<double>::infinity();
    if (right_bound <= half) break;
    w.push_back(next);
  }

  std::int64_t first = mode;
  double left_bound = 0.0;
  const bool truncate_left = lambda > PoissonWindow::kLeftTruncationThreshold;
  while (first > 0) {
    const double prev = w.front() * static_cast<double>(first) / lambda;
    if (truncate_left) {
      const double ratio = static_cast<double>(first - 1) / lambda;
      left_bound = prev / (1.0 - ratio);
      if (left_bound <= half) break;
    }
    w.push_front(prev);
    --first;
  }
  if (first == 0) left_bound = 0.0;

  win.first = first;
  win.weights.assign(w.begin(), w.end());
  double total = 0.0;
  for (double x : win.weights) total += x;
  for (double& x : win.weights) x /= total;
  win.tail_bound = left_bound + right_bound;
  return win;
}

}  // namespace urnlab

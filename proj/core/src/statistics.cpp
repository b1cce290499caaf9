#include "urnlab/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace urnlab {

SampleSummary summarize(std::span<const double> xs) {
  SampleSummary s;
  s.count = xs.size();
  if (xs.empty()) return s;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  s.mean = mean;
  if (xs.size() > 1) {
    s.variance = ss / static_cast<double>(xs.size() - 1);
    s.std_error = std::sqrt(s.variance / static_cast<double>(xs.size()));
  }
  return s;
}

double kolmogorov_distance(std::vector<double> xs,
                           const std::function<double(double)>& cdf) {
  if (xs.empty()) throw std::invalid_argument("kolmogorov_distance: no samples");
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // Ties share one jump: measure at the last copy of each value.
    if (i + 1 < xs.size() && xs[i + 1] == xs[i]) continue;
    const double f = cdf(xs[i]);
    std::size_t first = i;
    while (first > 0 && xs[first - 1] == xs[i]) --first;
    sup = std::max({sup, std::abs(static_cast<double>(i + 1) / n - f),
                    std::abs(f - static_cast<double>(first) / n)});
  }
  return sup;
}

double binned_tv(std::span<const double> a, std::span<const double> b,
                 std::size_t bins) {
  if (a.empty() || b.empty() || bins == 0)
    throw std::invalid_argument("binned_tv: empty sample or zero bins");
  const auto [amin, amax] = std::minmax_element(a.begin(), a.end());
  const auto [bmin, bmax] = std::minmax_element(b.begin(), b.end());
  const double lo = std::min(*amin, *bmin);
  const double hi = std::max(*amax, *bmax);
  const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;
  auto histogram = [&](std::span<const double> xs) {
    std::vector<double> h(bins, 0.0);
    for (double x : xs) {
      auto cell = static_cast<std::size_t>((x - lo) / width);
      h[std::min(cell, bins - 1)] += 1.0 / static_cast<double>(xs.size());
    }
    return h;
  };
  const auto ha = histogram(a);
  const auto hb = histogram(b);
  double sum = 0.0;
  for (std::size_t i = 0; i < bins; ++i) sum += std::abs(ha[i] - hb[i]);
  return 0.5 * sum;
}

}  // namespace urnlab

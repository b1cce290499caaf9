#include "urnlab/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace urnlab {

Pmf::Pmf(std::int64_t offset, std::vector<double> weights)
    : offset_(offset), weights_(std::move(weights)) {
  if (offset_ < 0) throw std::invalid_argument("Pmf: negative support offset");
  if (weights_.empty()) throw std::invalid_argument("Pmf: empty weight vector");
  double total = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0)
      throw std::invalid_argument("Pmf: weights must be finite and non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > kMassTolerance)
    throw std::invalid_argument("Pmf: weights sum to " + std::to_string(total) +
                                ", not 1");
}

Pmf Pmf::normalized(std::int64_t offset, std::vector<double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0) || !std::isfinite(total))
    throw std::invalid_argument("Pmf::normalized: total mass must be positive");
  for (double& w : weights) w /= total;
  return Pmf(offset, std::move(weights));
}

Pmf Pmf::point_mass(std::int64_t state) { return Pmf(state, {1.0}); }

double Pmf::at(std::int64_t state) const noexcept {
  const std::int64_t i = state - offset_;
  if (i < 0 || i >= static_cast<std::int64_t>(weights_.size())) return 0.0;
  return weights_[static_cast<std::size_t>(i)];
}

double Pmf::mean() const noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    m += weights_[i] * static_cast<double>(offset_ + static_cast<std::int64_t>(i));
  return m;
}

double Pmf::variance() const noexcept {
  const double m = mean();
  double v = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double d =
        static_cast<double>(offset_ + static_cast<std::int64_t>(i)) - m;
    v += weights_[i] * d * d;
  }
  return v;
}

double Pmf::cdf(std::int64_t state) const noexcept {
  if (state < offset_) return 0.0;
  const std::int64_t last = std::min<std::int64_t>(
      state - offset_, static_cast<std::int64_t>(weights_.size()) - 1);
  double c = 0.0;
  for (std::int64_t i = 0; i <= last; ++i) c += weights_[static_cast<std::size_t>(i)];
  return std::min(c, 1.0);
}

}  // namespace urnlab

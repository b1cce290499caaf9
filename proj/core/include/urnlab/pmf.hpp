#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace urnlab {

/// A finite probability vector over the integer states
/// offset, offset + 1, ..., offset + size() - 1.
///
/// Construction validates: offset >= 0, every weight finite and >= 0, and the
/// weights sum to 1 within kMassTolerance. Use `normalized` when the input is
/// only proportional to a law.
class Pmf {
 public:
  static constexpr double kMassTolerance = 1e-12;

  Pmf(std::int64_t offset, std::vector<double> weights);

  /// Rescales `weights` to unit mass, then validates.
  static Pmf normalized(std::int64_t offset, std::vector<double> weights);
  static Pmf point_mass(std::int64_t state);

  std::int64_t offset() const noexcept { return offset_; }
  std::int64_t first_state() const noexcept { return offset_; }
  std::int64_t last_state() const noexcept {
    return offset_ + static_cast<std::int64_t>(weights_.size()) - 1;
  }
  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Probability of `state`; zero outside the stored support.
  double at(std::int64_t state) const noexcept;

  double mean() const noexcept;
  /// Central second moment, accumulated around the mean.
  double variance() const noexcept;
  /// P(X <= state).
  double cdf(std::int64_t state) const noexcept;

  bool operator==(const Pmf&) const = default;

 private:
  std::int64_t offset_;
  std::vector<double> weights_;
};

}  // namespace urnlab

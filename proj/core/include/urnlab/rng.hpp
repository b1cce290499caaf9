#pragma once

#include <cstdint>
#include <limits>

namespace urnlab {

/// Deterministic random stream keyed by (seed, stream_id).
///
/// The key is expanded with splitmix64 into a xoshiro256++ state, so every
/// (seed, stream_id) pair yields a fixed sequence independent of which thread
/// draws it or in which order streams are consumed. Models
/// UniformRandomBitGenerator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Child stream for trajectory `index`; a pure function of
  /// (seed, stream_id, index).
  RngStream substream(std::uint64_t index) const noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }
  /// Standard exponential draw (ziggurat).
  double exponential() noexcept;
  double exponential(double rate) noexcept { return exponential() / rate; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  static constexpr std::uint64_t rotl(std::uint64_t x, int r) noexcept {
    return (x << r) | (x >> (64 - r));
  }

  std::uint64_t s_[4];
};

}  // namespace urnlab

#include "urnlab/rng.hpp"

#include <boost/random/exponential_distribution.hpp>

namespace urnlab {
namespace {

constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t s = a ^ (b * 0xd1342543de82ef95ULL);
  return splitmix64(s);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : seed_(seed), stream_id_(stream_id) {
  std::uint64_t state = mix(seed, stream_id) ^ mix(stream_id, ~seed);
  for (auto& word : s_) word = splitmix64(state);
}

RngStream RngStream::substream(std::uint64_t index) const noexcept {
  return RngStream(seed_, mix(stream_id_ + 0x632be59bd9b4e019ULL, index));
}

double RngStream::exponential() noexcept {
  boost::random::exponential_distribution<double> exp1(1.0);
  return exp1(*this);
}

}  // namespace urnlab

#include "urnlab/stochastic_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "urnlab/parallel.hpp"

namespace urnlab {
namespace {

struct Rates {
  double up;
  double total;
};

Rates rates_at(const ChainParams& p, std::int64_t x) {
  const double b = birth_rate(p, x);
  return {b, b + death_rate(p, x)};
}

// One jump from x: +1 with probability up/total, else -1.
std::int64_t jump(const Rates& r, std::int64_t x, RngStream& rng) {
  return rng.uniform() * r.total < r.up ? x + 1 : x - 1;
}

void require_start(const ChainParams& p, std::int64_t x0) {
  if (!p.contains(x0))
    throw std::domain_error("start state " + std::to_string(x0) + " outside [0, k]");
}

void require_horizon(double horizon) {
  if (!(horizon >= 0.0) || !std::isfinite(horizon))
    throw std::domain_error("horizon must be finite and non-negative");
}

}  // namespace

std::int64_t Trajectory::state_at(double t) const {
  if (t < 0.0 || t > horizon) throw std::domain_error("state_at: t outside [0, horizon]");
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return x0;
  return states[static_cast<std::size_t>(std::distance(times.begin(), it)) - 1];
}

Trajectory sample_path(const ChainParams& p, std::int64_t x0, double horizon,
                       RngStream& rng) {
  require_start(p, x0);
  require_horizon(horizon);
  Trajectory path{x0, horizon, {}, {}};
  std::int64_t x = x0;
  double now = 0.0;
  for (;;) {
    const Rates r = rates_at(p, x);
    now += rng.exponential(r.total);
    if (now > horizon) break;
    x = jump(r, x, rng);
    path.times.push_back(now);
    path.states.push_back(x);
  }
  return path;
}

std::int64_t sample_state_at(const ChainParams& p, std::int64_t x0, double t,
                             RngStream& rng) {
  require_start(p, x0);
  require_horizon(t);
  std::int64_t x = x0;
  double now = 0.0;
  for (;;) {
    const Rates r = rates_at(p, x);
    now += rng.exponential(r.total);
    if (now > t) return x;
    x = jump(r, x, rng);
  }
}

CouplingOutcome run_coupled(const ChainParams& p, std::int64_t x0, std::int64_t y0,
                            double horizon, RngStream& rng) {
  require_start(p, x0);
  require_start(p, y0);
  require_horizon(horizon);

  CouplingOutcome out;
  out.min_state = std::min(x0, y0);
  out.max_state = std::max(x0, y0);
  const bool ordered = x0 <= y0;
  std::int64_t x = x0;
  std::int64_t y = y0;
  double now = 0.0;
  while (x != y) {
    const Rates rx = rates_at(p, x);
    const Rates ry = rates_at(p, y);
    now += rng.exponential(rx.total + ry.total);
    if (now > horizon) return out;
    if (rng.uniform() * (rx.total + ry.total) < rx.total)
      x = jump(rx, x, rng);
    else
      y = jump(ry, y, rng);
    ++out.events;
    out.min_state = std::min({out.min_state, x, y});
    out.max_state = std::max({out.max_state, x, y});
    if (ordered && x > y) out.order_violated = true;
  }
  out.coalescence_time = now;
  return out;
}

CoupledPaths sample_coupled_paths(const ChainParams& p, std::int64_t x0,
                                  std::int64_t y0, double horizon, RngStream& rng) {
  require_start(p, x0);
  require_start(p, y0);
  require_horizon(horizon);
  CoupledPaths paths;
  std::int64_t x = x0;
  std::int64_t y = y0;
  double now = 0.0;
  for (;;) {
    const Rates rx = rates_at(p, x);
    if (x == y) {
      now += rng.exponential(rx.total);
      if (now > horizon) break;
      x = y = jump(rx, x, rng);
    } else {
      const Rates ry = rates_at(p, y);
      now += rng.exponential(rx.total + ry.total);
      if (now > horizon) break;
      if (rng.uniform() * (rx.total + ry.total) < rx.total)
        x = jump(rx, x, rng);
      else
        y = jump(ry, y, rng);
    }
    paths.times.push_back(now);
    paths.first.push_back(x);
    paths.second.push_back(y);
  }
  return paths;
}

double hitting_time_zero(const ChainParams& p, std::int64_t x0, RngStream& rng) {
  require_start(p, x0);
  std::int64_t x = x0;
  double now = 0.0;
  while (x != 0) {
    const Rates r = rates_at(p, x);
    now += rng.exponential(r.total);
    x = jump(r, x, rng);
  }
  return now;
}

double exp_sum_sample(std::int64_t x, std::int64_t y, RngStream& rng) {
  if (y < 0 || y >= x) throw std::domain_error("exp_sum_sample: need 0 <= y < x");
  double sum = 0.0;
  for (std::int64_t z = y + 1; z <= x; ++z)
    sum += rng.exponential() / static_cast<double>(z);
  return sum;
}

Pmf empirical_pmf(const ChainParams& p, std::int64_t x0, double t,
                  std::uint64_t samples, const RngStream& rng, unsigned workers) {
  require_start(p, x0);
  require_horizon(t);
  if (samples == 0) throw std::invalid_argument("empirical_pmf: samples must be >= 1");
  const auto states = parallel_map(samples, workers, [&](std::size_t i) {
    RngStream stream = rng.substream(i);
    return sample_state_at(p, x0, t, stream);
  });
  std::vector<double> counts(static_cast<std::size_t>(p.num_states()), 0.0);
  for (std::int64_t s : states) counts[static_cast<std::size_t>(s)] += 1.0;
  return Pmf::normalized(0, std::move(counts));
}

}  // namespace urnlab

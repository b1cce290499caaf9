#include "urnlab/asymptotic_checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "urnlab/parallel.hpp"
#include "urnlab/stochastic_sim.hpp"

namespace urnlab {

std::string_view to_string(Statistic s) noexcept {
  switch (s) {
    case Statistic::tv: return "tv";
    case Statistic::kolmogorov: return "kolmogorov";
    case Statistic::ratio_gap: return "ratio-gap";
    case Statistic::probability: return "probability";
  }
  return "unknown";
}

DiscrepancyReport DiscrepancyReport::make(std::string label, const ChainParams& p,
                                          Statistic statistic, double value,
                                          double tolerance) {
  return {std::move(label), p.n(), p.k(), statistic, value, tolerance,
          value <= tolerance};
}

double rescaled_cell_width(const ChainParams& p) {
  const double kap = p.kappa();
  return 1.0 / (std::sqrt(static_cast<double>(p.n())) * kap * (1.0 - kap));
}

double rescale_state(const ChainParams& p, std::int64_t x) {
  if (!p.contains(x)) throw std::domain_error("rescale_state: state outside [0, k]");
  return (static_cast<double>(x) - p.center()) * rescaled_cell_width(p);
}

GaussianLaw ou_marginal(double z, double s) {
  if (!(s >= 0.0)) throw std::domain_error("ou_marginal: s must be non-negative");
  return {z * std::exp(-2.0 * s), std::sqrt(-std::expm1(-4.0 * s))};
}

std::int64_t ou_start_state(const ChainParams& p, double z) {
  const double target = p.center() + z / rescaled_cell_width(p);
  const auto x0 = static_cast<std::int64_t>(std::llround(target));
  if (!p.contains(x0)) throw std::domain_error("ou_start_state: start falls outside [0, k]");
  return x0;
}

DiscrepancyReport ou_discrepancy(const ChainParams& p, double z, double s,
                                 double tolerance, const EvolveOptions& opts) {
  const std::int64_t x0 = ou_start_state(p, z);
  const double z_lattice = rescale_state(p, x0);
  const GaussianLaw target = ou_marginal(z_lattice, s);
  const Pmf law = evolve(p, Pmf::point_mass(x0), static_cast<double>(p.n()) * s, opts);

  const double h = rescaled_cell_width(p);
  double sum = 0.0;
  double covered = 0.0;
  for (std::int64_t x = 0; x <= p.k(); ++x) {
    const double y = rescale_state(p, x);
    const double cell = target.cdf(y + 0.5 * h) - target.cdf(y - 0.5 * h);
    covered += cell;
    sum += std::abs(law.at(x) - cell);
  }
  sum += std::max(0.0, 1.0 - covered);
  return DiscrepancyReport::make("ou-marginal", p, Statistic::tv,
                                 std::clamp(0.5 * sum, 0.0, 1.0), tolerance);
}

DiscrepancyReport equilibrium_gaussian_gap(const ChainParams& p, double tolerance) {
  const Pmf pi = stationary_pmf(p);
  double below = 0.0;
  double sup = 0.0;
  for (std::int64_t x = 0; x <= p.k(); ++x) {
    const double phi = normal_cdf(rescale_state(p, x));
    const double above = std::min(1.0, below + pi.at(x));
    sup = std::max({sup, std::abs(below - phi), std::abs(above - phi)});
    below = above;
  }
  return DiscrepancyReport::make("equilibrium-gaussian", p, Statistic::kolmogorov, sup,
                                 tolerance);
}

QueueRateGap queue_rate_gap(const ChainParams& p, std::int64_t x, double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("queue_rate_gap: alpha must be > 0");
  const double n = static_cast<double>(p.n());
  QueueRateGap gap{std::abs(n * birth_rate(p, x) / (2.0 * alpha) - 1.0), std::nullopt};
  if (x >= 1)
    gap.down = std::abs(n * death_rate(p, x) / (2.0 * static_cast<double>(x)) - 1.0);
  return gap;
}

double mminf_queue_time(double scale, double theta) {
  if (!(scale > 0.0)) throw std::domain_error("mminf_queue_time: C must be positive");
  return 0.5 * std::log(scale) + theta;
}

DiscrepancyReport mminf_discrepancy(const ChainParams& p, std::int64_t x0, double theta,
                                    double scale, double tolerance,
                                    const EvolveOptions& opts) {
  const double s = mminf_queue_time(scale, theta);
  if (!(s >= 0.0)) throw std::domain_error("mminf_discrepancy: queue time is negative");
  if (!p.contains(x0)) throw std::domain_error("mminf_discrepancy: start outside [0, k]");
  const double alpha = p.center();
  const double survive = std::exp(-2.0 * s);
  const Pmf chain = evolve(p, Pmf::point_mass(x0), static_cast<double>(p.n()) * s, opts);
  const Pmf queue = binpois_convolution(x0, survive, alpha * (1.0 - survive));
  return DiscrepancyReport::make("mminf-law", p, Statistic::tv, tv_distance(chain, queue),
                                 tolerance);
}

double chebyshev_envelope(double scale, double eps) {
  return (1.0 + scale) / (eps * eps * scale * scale);
}

DiscrepancyReport concentration_report(const ChainParams& p, double scale, double eps,
                                       WindowKind kind, std::uint64_t samples,
                                       const RngStream& rng, double tolerance,
                                       unsigned workers) {
  if (!(eps > 0.0)) throw std::domain_error("concentration_report: eps must be > 0");
  const WindowTime window = window_time(p, kind, scale);
  const double kap = p.kappa();
  const double root_n = std::sqrt(static_cast<double>(p.n()));
  double center = scale;
  double band = eps * scale;
  if (kind == WindowKind::plus) {
    center = p.center() + scale * kap * (1.0 - kap) * root_n;
    band = eps * scale * kap * root_n;
  }
  auto outside = [&](std::int64_t x) { return std::abs(static_cast<double>(x) - center) > band; };

  double probability = 0.0;
  if (p.num_states() <= kExactConcentrationMaxStates) {
    const Pmf law = evolve(p, Pmf::point_mass(p.k()), window.t);
    for (std::int64_t x = 0; x <= p.k(); ++x)
      if (outside(x)) probability += law.at(x);
  } else {
    if (samples == 0) throw std::invalid_argument("concentration_report: samples must be >= 1");
    const auto hits = parallel_map(samples, workers, [&](std::size_t i) {
      RngStream stream = rng.substream(i);
      return outside(sample_state_at(p, p.k(), window.t, stream)) ? 1 : 0;
    });
    std::uint64_t count = 0;
    for (int h : hits) count += static_cast<std::uint64_t>(h);
    probability = static_cast<double>(count) / static_cast<double>(samples);
  }
  const char* label = kind == WindowKind::plus ? "concentration-plus" : "concentration-minus";
  return DiscrepancyReport::make(label, p, Statistic::probability,
                                 std::min(probability, 1.0), tolerance);
}

}  // namespace urnlab

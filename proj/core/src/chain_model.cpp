#include "urnlab/chain_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

namespace urnlab {
namespace {

void require_state(const ChainParams& p, std::int64_t x) {
  if (!p.contains(x))
    throw std::domain_error("state " + std::to_string(x) + " outside [0, " +
                            std::to_string(p.k()) + "]");
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::domain_error("time must be finite and non-negative");
}

double log_binomial(double a, double b) {
  using boost::math::lgamma;
  return lgamma(a + 1.0) - lgamma(b + 1.0) - lgamma(a - b + 1.0);
}

}  // namespace

ChainParams::ChainParams(std::int64_t n, std::int64_t k) : n_(n), k_(k) {
  if (n < 2) throw std::domain_error("ChainParams: n must be at least 2");
  if (k < 1 || k > n / 2)
    throw std::domain_error("ChainParams: k must lie in [1, floor(n/2)], got k=" +
                            std::to_string(k) + " for n=" + std::to_string(n));
}

double birth_rate(const ChainParams& p, std::int64_t x) {
  require_state(p, x);
  if (x + 1 > p.k()) return 0.0;
  const double gap = static_cast<double>(p.k() - x);
  const double n = static_cast<double>(p.n());
  return 2.0 * gap * gap / (n * n);
}

double death_rate(const ChainParams& p, std::int64_t x) {
  require_state(p, x);
  if (x < 1) return 0.0;
  const double n = static_cast<double>(p.n());
  const double black_in_second = static_cast<double>(p.n() - 2 * p.k() + x);
  return 2.0 * static_cast<double>(x) * black_in_second / (n * n);
}

double total_rate(const ChainParams& p, std::int64_t x) {
  return birth_rate(p, x) + death_rate(p, x);
}

double max_total_rate(const ChainParams& p) {
  // total_rate is a convex quadratic in x, so the maximum sits at an endpoint.
  return std::max(total_rate(p, 0), total_rate(p, p.k()));
}

Pmf stationary_pmf(const ChainParams& p) {
  const double n = static_cast<double>(p.n());
  const double k = static_cast<double>(p.k());
  const double log_norm = log_binomial(n, k);
  std::vector<double> logw(static_cast<std::size_t>(p.num_states()));
  for (std::int64_t x = 0; x <= p.k(); ++x) {
    const double xd = static_cast<double>(x);
    logw[static_cast<std::size_t>(x)] =
        log_binomial(k, xd) + log_binomial(n - k, k - xd) - log_norm;
  }
  const double top = *std::max_element(logw.begin(), logw.end());
  std::vector<double> w(logw.size());
  std::transform(logw.begin(), logw.end(), w.begin(),
                 [top](double l) { return std::exp(l - top); });
  return Pmf::normalized(0, std::move(w));
}

double stationary_variance(const ChainParams& p) {
  const double n = static_cast<double>(p.n());
  const double kap = p.kappa();
  return kap * kap * (1.0 - kap) * (1.0 - kap) * n / (1.0 - 1.0 / n);
}

double mean_at(const ChainParams& p, std::int64_t x0, double t) {
  require_state(p, x0);
  require_time(t);
  const double n = static_cast<double>(p.n());
  return p.center() + (static_cast<double>(x0) - p.center()) * std::exp(-2.0 * t / n);
}

double variance_at(const ChainParams& p, std::int64_t x0, double t) {
  require_state(p, x0);
  require_time(t);
  const double n = static_cast<double>(p.n());
  const double kap = p.kappa();
  const double xbar = static_cast<double>(x0) - p.center();
  const double decay = std::exp(-2.0 * t / n);

  const double relax = -std::expm1(-4.0 / n * (1.0 - 1.0 / n) * t);
  const double stationary = stationary_variance(p) * relax;

  // (1 - e^{-(2/n)(1-2/n)t}) / (1 - 2/n), which tends to (2/n) t at n = 2.
  const double slack = 1.0 - 2.0 / n;
  const double cross_factor =
      slack == 0.0 ? 2.0 / n * t : -std::expm1(-2.0 / n * slack * t) / slack;
  const double half_gap = 0.5 - kap;
  const double cross = 4.0 * half_gap * half_gap * xbar * decay * cross_factor;

  const double drift = xbar * decay;
  const double spread = drift * drift * std::expm1(4.0 * t / (n * n));

  return stationary + cross + spread;
}

WindowTime window_time(const ChainParams& p, WindowKind kind, double scale) {
  const double n = static_cast<double>(p.n());
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::domain_error("window_time: C must be positive");
  if (kind == WindowKind::minus) {
    if (scale > static_cast<double>(p.k()))
      throw std::domain_error("window_time(minus): C must not exceed k");
    return {kind, scale, 0.5 * n * std::log(static_cast<double>(p.k()) / scale)};
  }
  if (scale > std::sqrt(n))
    throw std::domain_error("window_time(plus): C must not exceed sqrt(n)");
  // Clamp the rounding residue at C = sqrt(n), where the two terms cancel.
  const double t = 0.25 * n * std::log(n) - 0.5 * n * std::log(scale);
  return {kind, scale, std::max(t, 0.0)};
}

}  // namespace urnlab

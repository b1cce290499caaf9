#include "urnlab/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "urnlab/poisson_window.hpp"

namespace urnlab {
namespace {

void require_series_tol(double tol) {
  if (!(tol > 0.0 && tol <= 1e-6))
    throw std::domain_error("series tolerance must lie in (0, 1e-6]");
}

// ceil(x) for a value that should be an integer when the input is a perfect
// power; snaps rounding noise like 8.000000000000002 back to 8.
std::int64_t stable_ceil(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, r)) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::ceil(x));
}

}  // namespace

RegimeSpec RegimeSpec::large() {
  return RegimeSpec(RegimeKind::large, std::nullopt, TimeForm::quarter_log_n);
}

RegimeSpec RegimeSpec::critical(double alpha, TimeForm form) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::domain_error("critical regime needs alpha > 0");
  return RegimeSpec(RegimeKind::critical, alpha, form);
}

RegimeSpec RegimeSpec::small() {
  return RegimeSpec(RegimeKind::small, std::nullopt, TimeForm::half_log_k);
}

std::int64_t RegimeSpec::canonical_k(std::int64_t n) const {
  const double nd = static_cast<double>(n);
  std::int64_t k = 0;
  switch (kind_) {
    case RegimeKind::large:
      k = n / 2;
      break;
    case RegimeKind::critical:
      k = stable_ceil(std::sqrt(*alpha_ * nd));
      break;
    case RegimeKind::small:
      k = stable_ceil(std::pow(nd, 0.3));
      break;
  }
  return std::clamp<std::int64_t>(k, 1, std::max<std::int64_t>(1, n / 2));
}

std::string_view to_string(RegimeKind kind) noexcept {
  switch (kind) {
    case RegimeKind::large: return "large";
    case RegimeKind::critical: return "critical";
    case RegimeKind::small: return "small";
  }
  return "unknown";
}

std::string_view to_string(TimeForm form) noexcept {
  return form == TimeForm::quarter_log_n ? "quarter-log-n" : "half-log-k";
}

RegimeKind parse_regime_kind(std::string_view name) {
  if (name == "large") return RegimeKind::large;
  if (name == "critical") return RegimeKind::critical;
  if (name == "small") return RegimeKind::small;
  throw std::invalid_argument("unknown regime '" + std::string(name) +
                              "' (expected large, critical or small)");
}

TimeForm parse_time_form(std::string_view name) {
  if (name == "quarter-log-n") return TimeForm::quarter_log_n;
  if (name == "half-log-k") return TimeForm::half_log_k;
  throw std::invalid_argument("unknown time form '" + std::string(name) +
                              "' (expected quarter-log-n or half-log-k)");
}

double GaussianLaw::cdf(double x) const {
  if (std > 0.0) return normal_cdf((x - mean) / std);
  return x >= mean ? 1.0 : 0.0;
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double gaussian_shift_tv(double m) {
  // 2 Phi(|m|/2) - 1 == erf(|m| / (2 sqrt 2)), without the cancellation.
  return std::erf(std::abs(m) / (2.0 * std::numbers::sqrt2));
}

double poisson_tv(double lambda1, double lambda2, double tol) {
  require_series_tol(tol);
  if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0))
    throw std::domain_error("poisson_tv: rates must be non-negative");
  if (lambda1 == lambda2) return 0.0;

  // 1 - TV is at most the Bhattacharyya coefficient exp(-(sqrt a - sqrt b)^2 / 2);
  // once that is below tol the laws are disjoint to within tol. This also keeps
  // far-apart or huge rates from building enormous windows.
  const double root_gap = std::sqrt(lambda1) - std::sqrt(lambda2);
  if (!(0.5 * root_gap * root_gap < -std::log(tol))) return 1.0;

  // Each window is within 2 * (tol/2) of its law in L1, so the half-L1 sum
  // below is within tol of the true distance.
  const PoissonWindow a = poisson_window(lambda1, 0.5 * tol);
  const PoissonWindow b = poisson_window(lambda2, 0.5 * tol);
  const std::int64_t lo = std::min(a.first, b.first);
  const std::int64_t hi = std::max(a.last(), b.last());
  auto weight = [](const PoissonWindow& w, std::int64_t j) {
    if (j < w.first || j > w.last()) return 0.0;
    return w.weights[static_cast<std::size_t>(j - w.first)];
  };
  double sum = 0.0;
  for (std::int64_t j = lo; j <= hi; ++j) sum += std::abs(weight(a, j) - weight(b, j));
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

double gumbel_tail(double x) { return -std::expm1(-std::exp(-x)); }

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

Pmf binpois_convolution(std::int64_t x0, double psurv, double lambda, double tol) {
  require_series_tol(tol);
  if (x0 < 0) throw std::domain_error("binpois_convolution: x0 must be >= 0");
  if (!(psurv >= 0.0 && psurv <= 1.0))
    throw std::domain_error("binpois_convolution: psurv must lie in [0, 1]");
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw std::domain_error("binpois_convolution: lambda must be >= 0");

  std::vector<double> binom(static_cast<std::size_t>(x0) + 1, 0.0);
  if (psurv == 0.0) {
    binom.front() = 1.0;
  } else if (psurv == 1.0) {
    binom.back() = 1.0;
  } else {
    using boost::math::lgamma;
    const double n = static_cast<double>(x0);
    const double lp = std::log(psurv);
    const double lq = std::log1p(-psurv);
    std::vector<double> logw(binom.size());
    for (std::int64_t i = 0; i <= x0; ++i) {
      const double id = static_cast<double>(i);
      logw[static_cast<std::size_t>(i)] = lgamma(n + 1.0) - lgamma(id + 1.0) -
                                          lgamma(n - id + 1.0) + id * lp +
                                          (n - id) * lq;
    }
    const double top = *std::max_element(logw.begin(), logw.end());
    double total = 0.0;
    for (std::size_t i = 0; i < binom.size(); ++i) {
      binom[i] = std::exp(logw[i] - top);
      total += binom[i];
    }
    for (double& w : binom) w /= total;
  }

  // A much smaller tail budget than tol keeps the second moment, which weights
  // the discarded tail quadratically, within tol as well.
  const PoissonWindow pois = poisson_window(lambda, tol * 1e-4);
  const std::size_t len = binom.size() + static_cast<std::size_t>(pois.last());
  std::vector<double> out(len, 0.0);
  for (std::size_t i = 0; i < binom.size(); ++i) {
    if (binom[i] == 0.0) continue;
    for (std::size_t j = 0; j < pois.weights.size(); ++j)
      out[i + static_cast<std::size_t>(pois.first) + j] += binom[i] * pois.weights[j];
  }
  return Pmf::normalized(0, std::move(out));
}

double limit_profile(const RegimeSpec& regime, double theta, double tol) {
  const double shift = std::exp(-2.0 * theta);
  switch (regime.kind()) {
    case RegimeKind::large:
      return gaussian_shift_tv(shift);
    case RegimeKind::critical: {
      const double a = *regime.alpha();
      const double bump =
          regime.time_form() == TimeForm::quarter_log_n ? std::sqrt(a) * shift : shift;
      return poisson_tv(a + bump, a, tol);
    }
    case RegimeKind::small:
      return gumbel_tail(2.0 * theta);
  }
  throw std::logic_error("limit_profile: unhandled regime");
}

ConsistencyGap consistency_gap(double alpha, double theta, double tol) {
  if (!(alpha > 0.0)) throw std::domain_error("consistency_gap: alpha must be > 0");
  const double shift = std::exp(-2.0 * theta);
  const double wide = poisson_tv(alpha + std::sqrt(alpha) * shift, alpha, tol);
  const double narrow = poisson_tv(alpha + shift, alpha, tol);
  return {std::abs(wide - gaussian_shift_tv(shift)),
          std::abs(narrow - gumbel_tail(2.0 * theta))};
}

}  // namespace urnlab

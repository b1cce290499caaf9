#include "urnlab/exact_engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "urnlab/errors.hpp"
#include "urnlab/poisson_window.hpp"

namespace urnlab {
namespace {

struct Kernel {
  std::vector<double> up;
  std::vector<double> down;
  std::vector<double> stay;
};

Kernel uniformized_kernel(const ChainParams& p, double rate) {
  const auto size = static_cast<std::size_t>(p.num_states());
  Kernel kern{std::vector<double>(size), std::vector<double>(size),
              std::vector<double>(size)};
  for (std::int64_t x = 0; x <= p.k(); ++x) {
    const auto i = static_cast<std::size_t>(x);
    kern.up[i] = birth_rate(p, x) / rate;
    kern.down[i] = death_rate(p, x) / rate;
    kern.stay[i] = std::max(0.0, 1.0 - kern.up[i] - kern.down[i]);
  }
  return kern;
}

double resolve_rate(const ChainParams& p, const EvolveOptions& opts) {
  if (!(opts.truncation_eps > 0.0 && opts.truncation_eps <= 1e-6))
    throw std::invalid_argument("evolve: truncation_eps must lie in (0, 1e-6]");
  const double exit_max = max_total_rate(p);
  if (!opts.uniformization_rate) return exit_max;
  const double rate = *opts.uniformization_rate;
  if (!std::isfinite(rate) || rate < exit_max)
    throw std::invalid_argument(
        "evolve: uniformization rate must dominate the maximal exit rate");
  return rate;
}

}  // namespace

Pmf evolve(const ChainParams& p, const Pmf& initial, double t,
           const EvolveOptions& opts) {
  const double rate = resolve_rate(p, opts);
  if (!(t >= 0.0) || !std::isfinite(t))
    throw std::domain_error("evolve: time must be finite and non-negative");
  if (initial.first_state() < 0 || initial.last_state() > p.k())
    throw std::invalid_argument("evolve: initial law has mass outside [0, k]");

  const auto size = static_cast<std::size_t>(p.num_states());
  std::vector<double> v(size, 0.0);
  std::int64_t lo = p.k();
  std::int64_t hi = 0;
  for (std::int64_t x = initial.first_state(); x <= initial.last_state(); ++x) {
    const double w = initial.at(x);
    v[static_cast<std::size_t>(x)] = w;
    if (w > 0.0) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  if (t == 0.0) return Pmf(0, std::move(v));

  const Kernel kern = uniformized_kernel(p, rate);
  const PoissonWindow win = poisson_window(rate * t, opts.truncation_eps);

  std::vector<double> out(size, 0.0);
  std::vector<double> next(size, 0.0);
  for (std::int64_t step = 0;; ++step) {
    if (step >= win.first) {
      const double w = win.weights[static_cast<std::size_t>(step - win.first)];
      for (std::int64_t x = lo; x <= hi; ++x) {
        const auto i = static_cast<std::size_t>(x);
        out[i] += w * v[i];
      }
    }
    if (step == win.last()) break;

    // Row-vector step v <- v P on the support grown by one state each side.
    const std::int64_t nlo = std::max<std::int64_t>(0, lo - 1);
    const std::int64_t nhi = std::min(p.k(), hi + 1);
    for (std::int64_t x = nlo; x <= nhi; ++x) {
      const auto i = static_cast<std::size_t>(x);
      double acc = v[i] * kern.stay[i];
      if (x > 0) acc += v[i - 1] * kern.up[i - 1];
      if (x < p.k()) acc += v[i + 1] * kern.down[i + 1];
      next[i] = acc;
    }
    for (std::int64_t x = nlo; x <= nhi; ++x) {
      const auto i = static_cast<std::size_t>(x);
      v[i] = next[i];
    }
    lo = nlo;
    hi = nhi;
  }

  double mass = 0.0;
  for (double w : out) {
    if (!std::isfinite(w) || w < 0.0)
      throw numeric_integrity_error("evolve: produced a non-finite or negative weight");
    mass += w;
  }
  if (std::abs(mass - 1.0) > 2.0 * opts.truncation_eps + 1e-12) {
    std::ostringstream msg;
    msg << "evolve: mass drifted to " << mass;
    throw numeric_integrity_error(msg.str());
  }
  return Pmf::normalized(0, std::move(out));
}

double tv_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("tv_distance: vectors have different lengths");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

double tv_distance(const Pmf& a, const Pmf& b) {
  const std::int64_t lo = std::min(a.first_state(), b.first_state());
  const std::int64_t hi = std::max(a.last_state(), b.last_state());
  double sum = 0.0;
  for (std::int64_t x = lo; x <= hi; ++x) sum += std::abs(a.at(x) - b.at(x));
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

double tv_to_equilibrium(const ChainParams& p, std::int64_t x0, double t,
                         const EvolveOptions& opts) {
  if (!p.contains(x0)) throw std::domain_error("tv_to_equilibrium: start outside [0, k]");
  return tv_distance(evolve(p, Pmf::point_mass(x0), t, opts), stationary_pmf(p));
}

WorstCaseTv worst_case_tv(const ChainParams& p, double t, const EvolveOptions& opts) {
  const Pmf pi = stationary_pmf(p);
  WorstCaseTv best{-1.0, 0};
  for (std::int64_t x = 0; x <= p.k(); ++x) {
    const double tv = tv_distance(evolve(p, Pmf::point_mass(x), t, opts), pi);
    if (tv > best.tv) best = {tv, x};
  }
  return best;
}

std::vector<double> apply_generator(const ChainParams& p, std::span<const double> f) {
  if (f.size() != static_cast<std::size_t>(p.num_states()))
    throw std::invalid_argument("apply_generator: f must have k + 1 entries");
  std::vector<double> out(f.size(), 0.0);
  for (std::int64_t x = 0; x <= p.k(); ++x) {
    const auto i = static_cast<std::size_t>(x);
    double acc = 0.0;
    if (x < p.k()) acc += birth_rate(p, x) * (f[i + 1] - f[i]);
    if (x > 0) acc += death_rate(p, x) * (f[i - 1] - f[i]);
    out[i] = acc;
  }
  return out;
}

double profile_time(const ChainParams& p, const RegimeSpec& regime, double theta) {
  const double n = static_cast<double>(p.n());
  if (regime.time_form() == TimeForm::quarter_log_n)
    return 0.25 * n * std::log(n) + theta * n;
  return 0.5 * n * std::log(static_cast<double>(p.k())) + theta * n;
}

ProfileCurve profile_curve(const ChainParams& p, const RegimeSpec& regime,
                           std::span<const double> thetas, const EvolveOptions& opts) {
  ProfileCurve curve;
  const std::int64_t expected_k = regime.canonical_k(p.n());
  if (expected_k != p.k()) {
    std::ostringstream msg;
    msg << "k=" << p.k() << " differs from the " << to_string(regime.kind())
        << " regime's canonical k=" << expected_k << " at n=" << p.n();
    curve.warnings.push_back(msg.str());
  }

  std::vector<double> grid(thetas.begin(), thetas.end());
  std::sort(grid.begin(), grid.end());

  const Pmf pi = stationary_pmf(p);
  Pmf law = Pmf::point_mass(p.k());
  double now = 0.0;
  for (double theta : grid) {
    const double t = profile_time(p, regime, theta);
    if (!(t >= 0.0)) {
      std::ostringstream msg;
      msg << "theta=" << theta << " maps to negative time " << t << " at n=" << p.n()
          << "; point skipped";
      curve.warnings.push_back(msg.str());
      continue;
    }
    law = evolve(p, law, t - now, opts);
    now = t;
    const double exact = tv_distance(law, pi);
    const double limit = limit_profile(regime, theta);
    curve.points.push_back({theta, t, exact, limit, std::abs(exact - limit)});
  }
  return curve;
}

}  // namespace urnlab

#include "urnlab/harness/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "urnlab/asymptotic_checks.hpp"
#include "urnlab/chain_model.hpp"
#include "urnlab/exact_engine.hpp"
#include "urnlab/limit_laws.hpp"
#include "urnlab/parallel.hpp"
#include "urnlab/statistics.hpp"
#include "urnlab/stochastic_sim.hpp"

namespace urnlab::harness {
namespace {

// Fixed stream ids, one per stochastic check, so adding or reordering checks
// never shifts another check's draws.
enum StreamId : std::uint64_t {
  kPathMoments = 1,
  kEmpiricalPmf = 2,
  kOrderSmall = 10,
  kOrderWide = 11,
  kPostMeeting = 12,
  kCoalescence = 13,
  kHittingMean = 20,
  kExpSumMean = 21,
  kExpSumGumbel = 22,
  kTauGumbel = 23,
  kSurrogateHitting = 24,
  kSurrogateExpSum = 25,
  kConcentration = 30,
};

class RowMaker {
 public:
  RowMaker(const ExperimentConfig& cfg, std::string suite)
      : cfg_(cfg), suite_(std::move(suite)) {}

  ReportRow row(std::string label, std::int64_t n, std::int64_t k, double value,
                double tolerance) const {
    ReportRow r;
    r.suite = suite_;
    r.label = std::move(label);
    r.n = n;
    r.k = k;
    r.value = value;
    r.tolerance = tolerance;
    r.passed = value <= tolerance;
    r.seed = cfg_.seed;
    return r;
  }

  ReportRow row(std::string label, const ChainParams& p, double value,
                double tolerance) const {
    return row(std::move(label), p.n(), p.k(), value, tolerance);
  }

  ReportRow row(const DiscrepancyReport& d) const {
    return row(d.label, d.n, d.k, d.value, d.tolerance);
  }

  // Strict decrease along a ladder, reported as the largest successive ratio
  // against the largest double below 1.
  ReportRow trend(std::string label, std::int64_t n, std::int64_t k,
                  const std::vector<double>& values) const {
    double worst = 0.0;
    for (std::size_t i = 1; i < values.size(); ++i) {
      double ratio;
      if (values[i - 1] > 0.0) ratio = values[i] / values[i - 1];
      else ratio = values[i] > 0.0 ? std::numeric_limits<double>::max() : 1.0;
      worst = std::max(worst, ratio);
    }
    return row(std::move(label), n, k, worst, std::nextafter(1.0, 0.0));
  }

 private:
  const ExperimentConfig& cfg_;
  std::string suite_;
};

double relative_error(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), std::numeric_limits<double>::min());
}

std::int64_t ceil_sqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

template <typename Fn>
std::vector<double> sample_values(std::uint64_t count, unsigned threads, const RngStream& base,
                                  Fn draw) {
  return parallel_map(count, threads, [&](std::size_t i) {
    RngStream rng = base.substream(i);
    return static_cast<double>(draw(rng));
  });
}

SuiteResult moments_rows(const ExperimentConfig& cfg) {
  SuiteResult out;
  const RowMaker m(cfg, "moments");
  const double rel_tol = cfg.tolerance("moments.relative_error");
  for (std::int64_t n : {100, 1000}) {
    for (std::int64_t k : {n / 2, ceil_sqrt(n)}) {
      const ChainParams p(n, k);
      Pmf law = Pmf::point_mass(k);
      double elapsed = 0.0;
      for (double t : {0.1 * static_cast<double>(n), static_cast<double>(n),
                       5.0 * static_cast<double>(n)}) {
        law = evolve(p, law, t - elapsed);
        elapsed = t;
        ReportRow mean_row = m.row("mean-relative-error", p,
                                   relative_error(law.mean(), mean_at(p, k, t)), rel_tol);
        mean_row.t = t;
        ReportRow var_row = m.row("variance-relative-error", p,
                                  relative_error(law.variance(), variance_at(p, k, t)), rel_tol);
        var_row.t = t;
        out.rows.push_back(std::move(mean_row));
        out.rows.push_back(std::move(var_row));
      }
    }
  }

  const ChainParams p(100, 50);
  const double t = 50.0;
  const auto xs = sample_values(cfg.samples, cfg.threads, RngStream(cfg.seed, kPathMoments),
                                [&](RngStream& rng) { return sample_state_at(p, 50, t, rng); });
  const SampleSummary s = summarize(xs);
  ReportRow z = m.row("path-mean-zscore", p,
                      s.std_error > 0.0 ? std::abs(s.mean - mean_at(p, 50, t)) / s.std_error
                                        : 0.0,
                      cfg.tolerance("moments.zscore"));
  z.t = t;
  z.limit = mean_at(p, 50, t);
  out.rows.push_back(std::move(z));

  const Pmf empirical = empirical_pmf(p, 50, t, cfg.samples, RngStream(cfg.seed, kEmpiricalPmf),
                                      cfg.threads);
  ReportRow tv = m.row("empirical-pmf-tv", p,
                       tv_distance(empirical, evolve(p, Pmf::point_mass(50), t)),
                       cfg.tolerance("moments.empirical_pmf_tv"));
  tv.t = t;
  out.rows.push_back(std::move(tv));
  return out;
}

SuiteResult rate_rows(const ExperimentConfig& cfg) {
  SuiteResult out;
  const RowMaker m(cfg, "rates");
  const double tol = cfg.tolerance("rates.identity_residual");
  const std::pair<std::int64_t, std::int64_t> cases[] = {{10, 5}, {1000, 500}, {1000000, 1000}};
  for (auto [n, k] : cases) {
    const ChainParams p(n, k);
    const double nd = static_cast<double>(n);
    const double kap = p.kappa();
    double drift = 0.0;
    double total = 0.0;
    for (std::int64_t x = 0; x <= k; ++x) {
      const double xbar = static_cast<double>(x) - p.center();
      const double b = birth_rate(p, x);
      const double d = death_rate(p, x);
      drift = std::max(drift, std::abs((b - d) + (2.0 / nd) * xbar));
      const double expected = 4.0 * kap * kap * (1.0 - kap) * (1.0 - kap) +
                              8.0 * (0.5 - kap) * (0.5 - kap) * xbar / nd +
                              4.0 * xbar * xbar / (nd * nd);
      total = std::max(total, std::abs((b + d) - expected));
    }
    out.rows.push_back(m.row("centered-drift-identity", p, drift, tol));
    out.rows.push_back(m.row("total-rate-identity", p, total, tol));
  }
  return out;
}

SuiteResult stationarity_rows(const ExperimentConfig& cfg) {
  SuiteResult out;
  const RowMaker m(cfg, "stationarity");
  for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{100, 10}, {1000, 500}}) {
    const ChainParams p(n, k);
    const Pmf pi = stationary_pmf(p);
    double residual = 0.0;
    for (std::int64_t x = 0; x < k; ++x)
      residual = std::max(residual,
                          std::abs(pi.at(x) * birth_rate(p, x) - pi.at(x + 1) * death_rate(p, x + 1)));
    out.rows.push_back(m.row("detailed-balance", p, residual,
                             cfg.tolerance("stationarity.detailed_balance")));
    ReportRow inv = m.row("evolve-invariance-tv", p,
                          tv_distance(evolve(p, pi, static_cast<double>(n)), pi),
                          cfg.tolerance("stationarity.evolve_tv"));
    inv.t = static_cast<double>(n);
    out.rows.push_back(std::move(inv));
  }
  return out;
}

}  // namespace

void SuiteResult::append(SuiteResult other) {
  rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()),
              std::make_move_iterator(other.rows.end()));
  warnings.insert(warnings.end(), std::make_move_iterator(other.warnings.begin()),
                  std::make_move_iterator(other.warnings.end()));
}

SuiteResult run_profile_suite(const ExperimentConfig& cfg,
                              const std::vector<RegimeSpec>& regimes) {
  SuiteResult out;
  const RowMaker m(cfg, "profile");
  const double tol = cfg.tolerance("profile.max_gap");
  const std::vector<double> default_grid = ExperimentConfig{}.theta.points();
  for (const RegimeSpec& regime : regimes) {
    const bool configured = regime.kind() == cfg.regime.kind();
    const RegimeSpec& spec = configured ? cfg.regime : regime;
    const auto ladder = configured && cfg.n_ladder ? *cfg.n_ladder : default_ladder(spec.kind());
    const auto grid = configured ? cfg.theta.points() : default_grid;
    const std::string name(to_string(spec.kind()));
    std::vector<double> max_gaps;
    std::int64_t last_n = 0;
    std::int64_t last_k = 0;
    for (std::int64_t n : ladder) {
      std::int64_t k = configured && cfg.k ? *cfg.k : spec.canonical_k(n);
      const ChainParams p(n, k);
      ProfileCurve curve = profile_curve(p, spec, grid);
      for (auto& w : curve.warnings) out.warnings.push_back(name + ": " + w);
      double max_gap = 0.0;
      for (const ProfilePoint& pt : curve.points) {
        ReportRow r = m.row(name + "-point", p, pt.tv_exact, 1.0);
        r.theta = pt.theta;
        r.t = pt.t;
        r.limit = pt.tv_limit;
        r.gap = pt.gap;
        r.tolerance = tol;
        r.passed = pt.gap <= tol;
        out.rows.push_back(std::move(r));
        max_gap = std::max(max_gap, pt.gap);
      }
      if (grid.size() > 1) out.rows.push_back(m.row(name + "-max-gap", p, max_gap, tol));
      max_gaps.push_back(max_gap);
      last_n = n;
      last_k = k;
    }
    if (ladder.size() > 1)
      out.rows.push_back(m.trend(name + "-max-gap-trend", last_n, last_k, max_gaps));
  }
  return out;
}

SuiteResult run_reparameterization_check(const ExperimentConfig& cfg) {
  SuiteResult out;
  const RowMaker m(cfg, "profile");
  for (double alpha : {0.25, 1.0, 4.0}) {
    const RegimeSpec quarter = RegimeSpec::critical(alpha, TimeForm::quarter_log_n);
    const RegimeSpec half = RegimeSpec::critical(alpha, TimeForm::half_log_k);
    double worst = 0.0;
    for (double theta : cfg.theta.points())
      worst = std::max(worst, std::abs(limit_profile(quarter, theta) -
                                       limit_profile(half, theta - 0.25 * std::log(alpha))));
    ReportRow r = m.row("critical-reparameterization", 0, 0, worst,
                        cfg.tolerance("profile.reparameterization"));
    r.limit = alpha;
    out.rows.push_back(std::move(r));
  }
  return out;
}

SuiteResult run_moments_suite(const ExperimentConfig& cfg) {
  SuiteResult out = moments_rows(cfg);
  out.append(rate_rows(cfg));
  out.append(stationarity_rows(cfg));
  return out;
}

SuiteResult run_couplings_suite(const ExperimentConfig& cfg) {
  SuiteResult out;
  const RowMaker m(cfg, "couplings");

  const std::pair<ChainParams, StreamId> order_cases[] = {{ChainParams(100, 50), kOrderSmall},
                                                          {ChainParams(10000, 100), kOrderWide}};
  for (const auto& [p, id] : order_cases) {
    const RngStream base(cfg.seed, id);
    const auto violations = parallel_map(cfg.samples, cfg.threads, [&](std::size_t i) {
      RngStream rng = base.substream(i);
      std::uniform_int_distribution<std::int64_t> pick(0, p.k());
      std::int64_t a = pick(rng);
      std::int64_t b = pick(rng);
      if (a > b) std::swap(a, b);
      return run_coupled(p, a, b, static_cast<double>(p.n()), rng).order_violated ? 1 : 0;
    });
    double count = 0.0;
    for (int v : violations) count += v;
    out.rows.push_back(m.row("order-violations", p, count,
                             cfg.tolerance("couplings.order_violations")));
  }

  {
    const ChainParams p(100, 50);
    const RngStream base(cfg.seed, kPostMeeting);
    const std::uint64_t pairs = std::min<std::uint64_t>(cfg.samples, 1000);
    const auto bad = parallel_map(pairs, cfg.threads, [&](std::size_t i) {
      RngStream rng = base.substream(i);
      const CoupledPaths paths = sample_coupled_paths(p, 0, p.k(), 2.0 * p.n(), rng);
      bool met = false;
      int disagreements = 0;
      for (std::size_t j = 0; j < paths.times.size(); ++j) {
        if (met && paths.first[j] != paths.second[j]) ++disagreements;
        met = met || paths.first[j] == paths.second[j];
      }
      return disagreements;
    });
    double total = 0.0;
    for (int b : bad) total += b;
    out.rows.push_back(m.row("post-meeting-disagreements", p, total,
                             cfg.tolerance("couplings.post_meeting_disagreements")));
  }

  {
    // Adjacent starts at distance delta^{-1/4} standard deviations above the
    // center, observed at 4 delta^{1/2} n.
    const ChainParams p(10000, 5000);
    const double delta = 0.01;
    const double root_n = std::sqrt(static_cast<double>(p.n()));
    const auto x0 = static_cast<std::int64_t>(
        std::floor(p.center() + std::pow(delta, -0.25) * root_n * p.kappa()));
    const std::int64_t y0 = x0 - 1;
    const double horizon = 4.0 * std::sqrt(delta) * static_cast<double>(p.n());
    const RngStream base(cfg.seed, kCoalescence);
    const auto met = parallel_map(cfg.samples, cfg.threads, [&](std::size_t i) {
      RngStream rng = base.substream(i);
      return run_coupled(p, y0, x0, horizon, rng).coalescence_time.has_value() ? 1 : 0;
    });
    double hits = 0.0;
    for (int h : met) hits += h;
    const double f = hits / static_cast<double>(cfg.samples);
    const double se = std::sqrt(f * (1.0 - f) / static_cast<double>(cfg.samples));
    ReportRow r = m.row("uncoalesced-fraction", p, 1.0 - f,
                        2.0 * std::pow(delta, 0.25) + cfg.tolerance("couplings.zscore") * se);
    r.t = horizon;
    out.rows.push_back(std::move(r));
  }
  return out;
}

SuiteResult run_asymptotics_suite(const ExperimentConfig& cfg) {
  SuiteResult out;
  const RowMaker m(cfg, "asymptotics");

  {
    std::vector<double> values;
    std::int64_t n = 0;
    for (n = 1000; n <= 100000; n *= 10) {
      const ChainParams p(n, n / 2);
      const DiscrepancyReport d = ou_discrepancy(p, 2.0, 1.0, cfg.tolerance("asymptotics.ou_tv"));
      ReportRow r = m.row(d);
      r.t = static_cast<double>(n);
      out.rows.push_back(std::move(r));
      values.push_back(d.value);
    }
    out.rows.push_back(m.trend("ou-marginal-trend", 100000, 50000, values));
  }

  {
    const double c = cfg.tolerance("equilibrium.envelope_constant");
    std::vector<double> values;
    for (std::int64_t n : {10000, 100000, 1000000}) {
      const ChainParams p(n, n / 2);
      const DiscrepancyReport d = equilibrium_gaussian_gap(p, c / std::sqrt(static_cast<double>(n)));
      out.rows.push_back(m.row("equilibrium-gaussian-envelope", p, d.value, d.tolerance));
      values.push_back(d.value);
      if (n == 1000000)
        out.rows.push_back(m.row("equilibrium-gaussian", p, d.value,
                                 cfg.tolerance("asymptotics.equilibrium_kolmogorov")));
    }
    out.rows.push_back(m.trend("equilibrium-gaussian-trend", 1000000, 500000, values));
  }

  {
    const std::int64_t x = 3;
    std::vector<double> ups;
    std::vector<double> downs;
    std::int64_t n = 0;
    std::int64_t k = 0;
    for (n = 10000; n <= 100000000; n *= 100) {
      k = ceil_sqrt(n);
      const ChainParams p(n, k);
      const QueueRateGap g = queue_rate_gap(p, x, 1.0);
      const double bound = 2.0 * static_cast<double>(x + 1) / static_cast<double>(k);
      out.rows.push_back(m.row("queue-rate-up", p, g.up, bound));
      out.rows.push_back(m.row("queue-rate-down", p, *g.down, bound));
      ups.push_back(g.up);
      downs.push_back(*g.down);
    }
    out.rows.push_back(m.trend("queue-rate-up-trend", n / 100, k, ups));
    out.rows.push_back(m.trend("queue-rate-down-trend", n / 100, k, downs));
  }

  {
    std::vector<double> values;
    const double scale = 50.0;
    for (std::int64_t n : {10000, 100000, 1000000}) {
      const ChainParams p(n, RegimeSpec::critical(1.0).canonical_k(n));
      const DiscrepancyReport d =
          mminf_discrepancy(p, 50, 0.0, scale, cfg.tolerance("asymptotics.mminf_tv"));
      ReportRow r = m.row(d);
      r.theta = 0.0;
      r.t = static_cast<double>(n) * mminf_queue_time(scale, 0.0);
      out.rows.push_back(std::move(r));
      values.push_back(d.value);
    }
    out.rows.push_back(m.trend("mminf-law-trend", 1000000, 1000, values));
  }

  for (double theta : {-1.0, 0.0, 1.0}) {
    const double tol = cfg.tolerance("asymptotics.consistency");
    ReportRow g = m.row("consistency-gaussian", 0, 0, consistency_gap(100.0, theta).to_gaussian, tol);
    g.theta = theta;
    g.limit = 100.0;
    ReportRow u = m.row("consistency-gumbel", 0, 0, consistency_gap(0.001, theta).to_gumbel, tol);
    u.theta = theta;
    u.limit = 0.001;
    out.rows.push_back(std::move(g));
    out.rows.push_back(std::move(u));
  }

  {
    const RngStream rng(cfg.seed, kConcentration);
    out.rows.push_back(m.row(concentration_report(
        ChainParams(10000, 5000), 100.0, 0.5, WindowKind::plus, cfg.samples, rng,
        cfg.tolerance("asymptotics.concentration_plus"), cfg.threads)));
    out.rows.push_back(m.row(concentration_report(
        ChainParams(1000000, 100), 20.0, 0.5, WindowKind::minus, cfg.samples, rng,
        cfg.tolerance("asymptotics.concentration_minus"), cfg.threads)));
  }

  const RowMaker c(cfg, "coupon");
  const double z_tol = cfg.tolerance("coupon.zscore");
  {
    const ChainParams p(20, 2);
    const auto xs = sample_values(cfg.samples, cfg.threads, RngStream(cfg.seed, kHittingMean),
                                  [&](RngStream& rng) { return hitting_time_zero(p, 2, rng); });
    const SampleSummary s = summarize(xs);
    const double oracle = 300.0 / 17.0;
    ReportRow r = c.row("hitting-time-mean-zscore", p, std::abs(s.mean - oracle) / s.std_error, z_tol);
    r.limit = oracle;
    out.rows.push_back(std::move(r));
  }
  {
    const auto xs = sample_values(cfg.samples, cfg.threads, RngStream(cfg.seed, kExpSumMean),
                                  [](RngStream& rng) { return exp_sum_sample(100, 0, rng); });
    const SampleSummary s = summarize(xs);
    double harmonic = 0.0;
    for (int z = 100; z >= 1; --z) harmonic += 1.0 / z;
    ReportRow r = c.row("exp-sum-mean-zscore", 100, 0, std::abs(s.mean - harmonic) / s.std_error, z_tol);
    r.limit = harmonic;
    out.rows.push_back(std::move(r));
  }
  {
    const std::int64_t mm = 10000;
    const double shift = std::log(static_cast<double>(mm));
    auto xs = sample_values(cfg.samples, cfg.threads, RngStream(cfg.seed, kExpSumGumbel),
                            [&](RngStream& rng) { return exp_sum_sample(mm, 0, rng) - shift; });
    out.rows.push_back(c.row("exp-sum-gumbel-kolmogorov", mm, 0,
                             kolmogorov_distance(std::move(xs), gumbel_cdf),
                             cfg.tolerance("coupon.exp_sum_kolmogorov")));
  }
  {
    const ChainParams p(1000000, 63);
    const double n = static_cast<double>(p.n());
    const double shift = std::log(static_cast<double>(p.k()));
    auto xs = sample_values(cfg.samples, cfg.threads, RngStream(cfg.seed, kTauGumbel),
                            [&](RngStream& rng) {
                              return 2.0 * hitting_time_zero(p, p.k(), rng) / n - shift;
                            });
    out.rows.push_back(c.row("hitting-time-gumbel-kolmogorov", p,
                             kolmogorov_distance(std::move(xs), gumbel_cdf),
                             cfg.tolerance("coupon.tau0_kolmogorov")));
  }
  {
    const ChainParams p(10000, 10);
    const double n = static_cast<double>(p.n());
    const auto hits = sample_values(cfg.samples, cfg.threads, RngStream(cfg.seed, kSurrogateHitting),
                                    [&](RngStream& rng) { return hitting_time_zero(p, 10, rng); });
    const auto sums = sample_values(cfg.samples, cfg.threads, RngStream(cfg.seed, kSurrogateExpSum),
                                    [&](RngStream& rng) { return 0.5 * n * exp_sum_sample(10, 0, rng); });
    out.rows.push_back(c.row("hitting-time-surrogate-tv", p, binned_tv(hits, sums, 40),
                             cfg.tolerance("coupon.surrogate_binned_tv")));
  }
  return out;
}

SuiteResult run_verify_all(const ExperimentConfig& cfg) {
  SuiteResult out = run_moments_suite(cfg);
  out.append(run_couplings_suite(cfg));
  out.append(run_asymptotics_suite(cfg));
  out.append(run_profile_suite(cfg, {RegimeSpec::large(), RegimeSpec::critical(1.0),
                                     RegimeSpec::small()}));
  out.append(run_reparameterization_check(cfg));
  return out;
}

SuiteResult run_configured(const ExperimentConfig& cfg) {
  switch (cfg.suite) {
    case Suite::profile: return run_profile_suite(cfg, {cfg.regime});
    case Suite::moments: return run_moments_suite(cfg);
    case Suite::couplings: return run_couplings_suite(cfg);
    case Suite::asymptotics: return run_asymptotics_suite(cfg);
    case Suite::all: return run_verify_all(cfg);
  }
  return {};
}

}  // namespace urnlab::harness

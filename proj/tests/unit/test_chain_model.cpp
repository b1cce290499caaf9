#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "urnlab/chain_model.hpp"
#include "urnlab/exact_engine.hpp"

using namespace urnlab;

TEST(ChainParams, RejectsInvalidSizes) {
  EXPECT_THROW(ChainParams(1, 1), std::domain_error);
  EXPECT_THROW(ChainParams(10, 0), std::domain_error);
  EXPECT_THROW(ChainParams(10, 6), std::domain_error);
  EXPECT_NO_THROW(ChainParams(10, 5));
  EXPECT_NO_THROW(ChainParams(2, 1));
}

TEST(ChainParams, DerivedQuantities) {
  const ChainParams p(10000, 5000);
  EXPECT_EQ(p.kappa(), 0.5);
  EXPECT_EQ(p.center(), 2500.0);
  EXPECT_EQ(p.num_states(), 5001);
  EXPECT_TRUE(p.contains(0));
  EXPECT_TRUE(p.contains(5000));
  EXPECT_FALSE(p.contains(5001));
  EXPECT_FALSE(p.contains(-1));
}

TEST(Rates, KnownValues) {
  const ChainParams p(10, 5);
  EXPECT_NEAR(birth_rate(p, 2), 0.18, 1e-15);
  EXPECT_EQ(birth_rate(p, 5), 0.0);
  EXPECT_EQ(death_rate(p, 0), 0.0);
  EXPECT_NEAR(death_rate(p, 2), 0.08, 1e-15);
  EXPECT_NEAR(total_rate(p, 2), 0.26, 1e-15);
  // b(0) = 2 * 25 / 100 = 0.5 and d(0) = 0.
  EXPECT_NEAR(total_rate(p, 0), 0.5, 1e-15);

  const ChainParams small(4, 2);
  EXPECT_NEAR(birth_rate(small, 0), 0.5, 1e-15);
  EXPECT_NEAR(death_rate(small, 2), 0.5, 1e-15);
}

TEST(Rates, OutOfRangeStatesThrow) {
  const ChainParams p(10, 5);
  EXPECT_THROW(birth_rate(p, -1), std::domain_error);
  EXPECT_THROW(death_rate(p, 6), std::domain_error);
  EXPECT_THROW(total_rate(p, 6), std::domain_error);
}

TEST(Rates, CenteredDriftAndTotalRateIdentities) {
  for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{10, 5}, {37, 11}, {1000, 500},
                      {1000000, 1000}}) {
    const ChainParams p(n, k);
    const double nd = static_cast<double>(n);
    const double kap = p.kappa();
    for (std::int64_t x = 0; x <= k; ++x) {
      const double xbar = static_cast<double>(x) - p.center();
      EXPECT_NEAR(birth_rate(p, x) - death_rate(p, x), -(2.0 / nd) * xbar, 1e-14);
      EXPECT_NEAR(total_rate(p, x),
                  4 * kap * kap * (1 - kap) * (1 - kap) + 8 * (0.5 - kap) * (0.5 - kap) * xbar / nd +
                      4 * xbar * xbar / (nd * nd),
                  1e-12);
      EXPECT_LE(total_rate(p, x), 1.0);
    }
  }
}

TEST(Rates, UncenteredDriftIdentityIsFalse) {
  // The drift identity only holds after recentring at k^2/n.
  const ChainParams p(10, 5);
  EXPECT_NEAR(birth_rate(p, 2) - death_rate(p, 2), 0.10, 1e-15);
  EXPECT_NEAR(-(2.0 / 10.0) * 2.0, -0.40, 1e-15);
}

TEST(Rates, MaxTotalRateDominatesEveryState) {
  for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{10, 5}, {100, 10}, {999, 3}}) {
    const ChainParams p(n, k);
    double best = 0.0;
    for (std::int64_t x = 0; x <= k; ++x) best = std::max(best, total_rate(p, x));
    EXPECT_DOUBLE_EQ(max_total_rate(p), best);
  }
}

TEST(Stationary, SmallExample) {
  const Pmf pi = stationary_pmf(ChainParams(4, 2));
  ASSERT_EQ(pi.size(), 3u);
  EXPECT_NEAR(pi.at(0), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(pi.at(1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(pi.at(2), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(pi.mean(), 1.0, 1e-15);
}

TEST(Stationary, MatchesExactHypergeometric) {
  for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{20, 7}, {60, 30}, {150, 12}}) {
    const ChainParams p(n, k);
    const Pmf pi = stationary_pmf(p);
    const long double total = oracle::binomial(n, k);
    for (std::int64_t r = 0; r <= k; ++r) {
      const double want = static_cast<double>(oracle::binomial(k, r) *
                                              oracle::binomial(n - k, k - r) / total);
      EXPECT_NEAR(pi.at(r), want, 1e-13 * std::max(1.0, want)) << "n=" << n << " r=" << r;
    }
    EXPECT_NEAR(pi.mean(), p.center(), 1e-11);
    EXPECT_NEAR(pi.variance(), stationary_variance(p), 1e-10);
  }
}

TEST(Stationary, DetailedBalance) {
  for (auto [n, k] : {std::pair<std::int64_t, std::int64_t>{10, 5}, {1000, 500}, {100000, 300}}) {
    const ChainParams p(n, k);
    const Pmf pi = stationary_pmf(p);
    for (std::int64_t x = 0; x < k; ++x)
      EXPECT_NEAR(pi.at(x) * birth_rate(p, x), pi.at(x + 1) * death_rate(p, x + 1), 1e-12);
  }
}

TEST(Stationary, LargePopulationStaysFinite) {
  const Pmf pi = stationary_pmf(ChainParams(10000000, 5000000));
  double sum = 0.0;
  for (double w : pi.weights()) {
    ASSERT_TRUE(std::isfinite(w));
    sum += w;
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(Moments, MeanExamples) {
  const ChainParams p(100, 50);
  EXPECT_NEAR(mean_at(p, 50, 50.0), 25.0 + 25.0 * std::exp(-1.0), 1e-12);
  EXPECT_NEAR(mean_at(p, 50, 50.0), 34.19698, 1e-5);
  EXPECT_EQ(mean_at(p, 17, 0.0), 17.0);
  const ChainParams q(10, 4);
  EXPECT_NEAR(mean_at(p, 25, 123.0), 25.0, 1e-12);
  EXPECT_NEAR(mean_at(q, 4, 1e6), 1.6, 1e-12);
  EXPECT_THROW(mean_at(p, 50, -1.0), std::domain_error);
}

TEST(Moments, VarianceLimits) {
  const ChainParams p(100, 50);
  EXPECT_EQ(variance_at(p, 50, 0.0), 0.0);
  const double kap = p.kappa();
  const double stationary = kap * kap * (1 - kap) * (1 - kap) * 100.0 / (1.0 - 1.0 / 100.0);
  EXPECT_NEAR(stationary, 6.3131313, 1e-6);
  EXPECT_NEAR(variance_at(p, 50, 1e6), stationary, 1e-9);
  EXPECT_NEAR(stationary_variance(p), stationary, 1e-12);
  EXPECT_THROW(variance_at(p, 50, -0.5), std::domain_error);
}

TEST(Moments, ClosedFormsMatchExactEvolution) {
  for (std::int64_t n : {2, 3, 10, 100, 1000}) {
    for (std::int64_t k : {std::int64_t{1}, n / 2}) {
      if (k < 1) continue;
      const ChainParams p(n, k);
      for (std::int64_t x0 : {std::int64_t{0}, k / 2, k}) {
        for (double t : {0.1 * n, 1.0 * n, 5.0 * n}) {
          const Pmf law = evolve(p, Pmf::point_mass(x0), t);
          EXPECT_NEAR(law.mean(), mean_at(p, x0, t), 1e-8 * std::max(1.0, mean_at(p, x0, t)))
              << "n=" << n << " k=" << k << " x0=" << x0 << " t=" << t;
          EXPECT_NEAR(law.variance(), variance_at(p, x0, t),
                      1e-8 * std::max(1.0, variance_at(p, x0, t)))
              << "n=" << n << " k=" << k << " x0=" << x0 << " t=" << t;
        }
      }
    }
  }
}

TEST(WindowTime, Examples) {
  EXPECT_NEAR(window_time(ChainParams(10000, 10), WindowKind::minus, 5.0).t,
              5000.0 * std::log(2.0), 1e-9);
  EXPECT_NEAR(window_time(ChainParams(10000, 10), WindowKind::minus, 10.0).t, 0.0, 1e-12);
  EXPECT_NEAR(window_time(ChainParams(10000, 5000), WindowKind::plus, 100.0).t, 0.0, 1e-9);
  const WindowTime w = window_time(ChainParams(10000, 5000), WindowKind::plus, 10.0);
  EXPECT_EQ(w.kind, WindowKind::plus);
  EXPECT_EQ(w.scale, 10.0);
  EXPECT_NEAR(w.t, 2500.0 * std::log(10000.0) - 5000.0 * std::log(10.0), 1e-9);
}

TEST(WindowTime, InadmissibleScalesThrow) {
  const ChainParams p(1000000, 10);
  EXPECT_THROW(window_time(p, WindowKind::minus, 20.0), std::domain_error);
  EXPECT_THROW(window_time(p, WindowKind::minus, 0.0), std::domain_error);
  EXPECT_THROW(window_time(p, WindowKind::plus, 1001.0), std::domain_error);
  EXPECT_THROW(window_time(p, WindowKind::plus, -1.0), std::domain_error);
}

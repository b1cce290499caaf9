#include <gtest/gtest.h>

#include <cmath>

#include "urnlab/pmf.hpp"
#include "urnlab/poisson_window.hpp"

using namespace urnlab;

TEST(Pmf, ValidatesWeights) {
  EXPECT_THROW(Pmf(0, {}), std::invalid_argument);
  EXPECT_THROW(Pmf(-1, {1.0}), std::invalid_argument);
  EXPECT_THROW(Pmf(0, {0.5, 0.6}), std::invalid_argument);
  EXPECT_THROW(Pmf(0, {1.5, -0.5}), std::invalid_argument);
  EXPECT_THROW(Pmf(0, {NAN, 1.0}), std::invalid_argument);
  EXPECT_NO_THROW(Pmf(3, {0.25, 0.75}));
}

TEST(Pmf, Accessors) {
  const Pmf p(2, {0.25, 0.5, 0.25});
  EXPECT_EQ(p.first_state(), 2);
  EXPECT_EQ(p.last_state(), 4);
  EXPECT_EQ(p.at(1), 0.0);
  EXPECT_EQ(p.at(3), 0.5);
  EXPECT_EQ(p.at(9), 0.0);
  EXPECT_DOUBLE_EQ(p.mean(), 3.0);
  EXPECT_DOUBLE_EQ(p.variance(), 0.5);
  EXPECT_DOUBLE_EQ(p.cdf(3), 0.75);
  EXPECT_DOUBLE_EQ(p.cdf(1), 0.0);
  EXPECT_DOUBLE_EQ(p.cdf(10), 1.0);
}

TEST(Pmf, NormalizedAndPointMass) {
  const Pmf p = Pmf::normalized(0, {1.0, 3.0});
  EXPECT_DOUBLE_EQ(p.at(1), 0.75);
  const Pmf d = Pmf::point_mass(7);
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d.at(7), 1.0);
  EXPECT_EQ(d.variance(), 0.0);
}

TEST(PoissonWindow, CoversMassWithinBudget) {
  for (double lambda : {0.0, 1e-3, 0.7, 10.0, 49.0, 51.0, 1234.5, 1e6}) {
    const PoissonWindow w = poisson_window(lambda, 1e-12);
    EXPECT_LE(w.tail_bound, 1e-12);
    double sum = 0.0;
    double mean = 0.0;
    for (std::size_t i = 0; i < w.weights.size(); ++i) {
      sum += w.weights[i];
      mean += w.weights[i] * static_cast<double>(w.first + static_cast<std::int64_t>(i));
    }
    EXPECT_NEAR(sum, 1.0, 1e-13);
    EXPECT_NEAR(mean, lambda, 1e-9 * std::max(1.0, lambda));
  }
}

TEST(PoissonWindow, WeightsMatchLogPmf) {
  const PoissonWindow w = poisson_window(30.0, 1e-14);
  for (std::size_t i = 0; i < w.weights.size(); i += 5) {
    const auto j = w.first + static_cast<std::int64_t>(i);
    EXPECT_NEAR(w.weights[i], std::exp(poisson_log_pmf(j, 30.0)), 1e-14);
  }
}

TEST(PoissonWindow, RejectsBadArguments) {
  EXPECT_THROW(poisson_window(-1.0, 1e-12), std::domain_error);
  EXPECT_THROW(poisson_window(1.0, 0.0), std::domain_error);
  EXPECT_THROW(poisson_window(1.0, 1.0), std::domain_error);
}

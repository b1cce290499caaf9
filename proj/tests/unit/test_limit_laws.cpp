#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "urnlab/limit_laws.hpp"

using namespace urnlab;

namespace {

double poisson_tv_bruteforce(double a, double b) {
  double pa = std::exp(-a);
  double pb = std::exp(-b);
  double sum = std::abs(pa - pb);
  for (int j = 1; j < 400; ++j) {
    pa *= a / j;
    pb *= b / j;
    sum += std::abs(pa - pb);
  }
  return 0.5 * sum;
}

}  // namespace

TEST(RegimeSpec, CanonicalK) {
  EXPECT_EQ(RegimeSpec::large().canonical_k(8192), 4096);
  EXPECT_EQ(RegimeSpec::critical(1.0).canonical_k(10000), 100);
  EXPECT_EQ(RegimeSpec::critical(1.0).canonical_k(100000), 317);
  EXPECT_EQ(RegimeSpec::critical(4.0).canonical_k(10000), 200);
  EXPECT_EQ(RegimeSpec::small().canonical_k(10000), 16);
  EXPECT_EQ(RegimeSpec::small().canonical_k(100000), 32);
  EXPECT_EQ(RegimeSpec::small().canonical_k(1000000), 64);
}

TEST(RegimeSpec, AlphaOnlyForCritical) {
  EXPECT_FALSE(RegimeSpec::large().alpha().has_value());
  EXPECT_FALSE(RegimeSpec::small().alpha().has_value());
  EXPECT_EQ(RegimeSpec::critical(2.5).alpha(), 2.5);
  EXPECT_EQ(RegimeSpec::large().time_form(), TimeForm::quarter_log_n);
  EXPECT_EQ(RegimeSpec::small().time_form(), TimeForm::half_log_k);
  EXPECT_THROW(RegimeSpec::critical(0.0), std::domain_error);
  EXPECT_THROW(RegimeSpec::critical(-1.0), std::domain_error);
}

TEST(RegimeSpec, NamesRoundTrip) {
  for (RegimeKind k : {RegimeKind::large, RegimeKind::critical, RegimeKind::small})
    EXPECT_EQ(parse_regime_kind(to_string(k)), k);
  for (TimeForm f : {TimeForm::quarter_log_n, TimeForm::half_log_k})
    EXPECT_EQ(parse_time_form(to_string(f)), f);
  EXPECT_THROW(parse_regime_kind("huge"), std::invalid_argument);
}

TEST(NormalCdf, Values) {
  EXPECT_EQ(normal_cdf(0.0), 0.5);
  EXPECT_NEAR(normal_cdf(40.0), 1.0, 1e-14);
  const double quad = 0.5 + oracle::simpson(oracle::std_normal_density, 0.0, 1.0, 2000);
  EXPECT_NEAR(normal_cdf(1.0), quad, 1e-13);
  EXPECT_NEAR(normal_cdf(1.0), 0.841344746, 1e-9);
}

TEST(GaussianShiftTv, MatchesQuadrature) {
  EXPECT_EQ(gaussian_shift_tv(0.0), 0.0);
  for (double m : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double quad = 0.5 * oracle::simpson(
                                   [m](double x) {
                                     return std::abs(oracle::std_normal_density(x - m) -
                                                     oracle::std_normal_density(x));
                                   },
                                   -20.0, 25.0, 450000);
    EXPECT_NEAR(gaussian_shift_tv(m), quad, 1e-10) << "m=" << m;
    EXPECT_EQ(gaussian_shift_tv(-m), gaussian_shift_tv(m));
  }
  EXPECT_NEAR(gaussian_shift_tv(2.0), 0.682689, 1e-6);
}

TEST(PoissonTv, Values) {
  EXPECT_EQ(poisson_tv(3.0, 3.0), 0.0);
  EXPECT_NEAR(poisson_tv(2.5, 0.0), 1.0 - std::exp(-2.5), 1e-12);
  EXPECT_NEAR(poisson_tv(2.0, 1.0), poisson_tv_bruteforce(2.0, 1.0), 1e-10);
  EXPECT_NEAR(poisson_tv(2.0, 1.0), 0.3297, 1e-4);
  EXPECT_NEAR(poisson_tv(1e-3, 1.0), poisson_tv_bruteforce(1e-3, 1.0), 1e-10);
}

TEST(PoissonTv, SymmetricAndMonotone) {
  for (double a : {0.2, 1.0, 7.0, 150.0}) {
    double previous = 0.0;
    for (double d = 0.1; d < 5.0; d += 0.3) {
      const double v = poisson_tv(a + d, a);
      EXPECT_NEAR(v, poisson_tv(a, a + d), 1e-12);
      EXPECT_GT(v, previous);
      previous = v;
    }
  }
}

TEST(PoissonTv, LargeRates) {
  const double v = poisson_tv(1e6 + 1000.0, 1e6);
  EXPECT_NEAR(v, gaussian_shift_tv(1.0), 5e-3);
}

TEST(PoissonTv, Errors) {
  EXPECT_THROW(poisson_tv(-1.0, 1.0), std::domain_error);
  EXPECT_THROW(poisson_tv(1.0, 1.0, 0.0), std::domain_error);
  EXPECT_THROW(poisson_tv(1.0, 1.0, 1e-3), std::domain_error);
}

TEST(Gumbel, Values) {
  EXPECT_NEAR(gumbel_tail(0.0), 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(gumbel_tail(-40.0), 1.0, 1e-14);
  const double far = gumbel_tail(40.0);
  EXPECT_GT(far, 0.0);
  EXPECT_LT(far, 1e-17);
  EXPECT_NEAR(far, std::exp(-40.0), 1e-30);
  EXPECT_NEAR(gumbel_cdf(0.3) + gumbel_tail(0.3), 1.0, 1e-15);
}

TEST(BinPois, Examples) {
  const Pmf d = binpois_convolution(7, 1.0, 0.0);
  EXPECT_NEAR(d.at(7), 1.0, 1e-15);
  const Pmf half = binpois_convolution(1, 0.5, 0.0);
  EXPECT_NEAR(half.at(0), 0.5, 1e-15);
  EXPECT_NEAR(half.at(1), 0.5, 1e-15);
  const Pmf pois = binpois_convolution(0, 0.3, 4.0);
  for (int j = 0; j < 20; ++j) {
    double want = std::exp(-4.0);
    for (int i = 1; i <= j; ++i) want *= 4.0 / i;
    EXPECT_NEAR(pois.at(j), want, 1e-12);
  }
}

TEST(BinPois, MomentsAndMassFunction) {
  const std::int64_t x0 = 50;
  const double ps = 0.3;
  const double lambda = 6.5;
  const Pmf law = binpois_convolution(x0, ps, lambda);
  EXPECT_NEAR(law.mean(), x0 * ps + lambda, 1e-10 * (x0 * ps + lambda + 1));
  EXPECT_NEAR(law.variance(), x0 * ps * (1 - ps) + lambda, 1e-10 * (x0 * ps + lambda + 1));
  // Direct convolution of exact binomial and Poisson masses.
  for (std::int64_t y : {0, 5, 15, 30}) {
    double want = 0.0;
    for (std::int64_t b = 0; b <= std::min<std::int64_t>(y, x0); ++b) {
      double pois = std::exp(-lambda);
      for (std::int64_t i = 1; i <= y - b; ++i) pois *= lambda / static_cast<double>(i);
      want += static_cast<double>(oracle::binomial(x0, b)) * std::pow(ps, b) *
              std::pow(1 - ps, x0 - b) * pois;
    }
    EXPECT_NEAR(law.at(y), want, 1e-12) << "y=" << y;
  }
}

TEST(BinPois, Errors) {
  EXPECT_THROW(binpois_convolution(3, 1.5, 1.0), std::domain_error);
  EXPECT_THROW(binpois_convolution(3, 0.5, -1.0), std::domain_error);
}

TEST(LimitProfile, Examples) {
  EXPECT_NEAR(limit_profile(RegimeSpec::large(), 0.0), 2.0 * normal_cdf(0.5) - 1.0, 1e-15);
  EXPECT_NEAR(limit_profile(RegimeSpec::large(), 0.0), 0.38292, 1e-5);
  EXPECT_NEAR(limit_profile(RegimeSpec::small(), 0.0), 0.632120, 1e-6);
  EXPECT_NEAR(limit_profile(RegimeSpec::critical(1.0), 0.0), poisson_tv(2.0, 1.0), 1e-15);
  for (double theta : {-1.0, 0.0, 0.7}) {
    EXPECT_NEAR(limit_profile(RegimeSpec::critical(1.0, TimeForm::quarter_log_n), theta),
                limit_profile(RegimeSpec::critical(1.0, TimeForm::half_log_k), theta), 2e-10);
  }
}

TEST(LimitProfile, ReparameterizationShift) {
  // n/4 log n = n/2 log k - n/4 log alpha when k^2 = alpha n, so the
  // quarter-log-n coordinate theta is the half-log-k coordinate
  // theta - 1/4 log alpha.
  for (double alpha : {0.25, 1.0, 4.0}) {
    for (double theta : {-2.0, -0.5, 0.0, 1.0, 2.0}) {
      const double form1 = limit_profile(RegimeSpec::critical(alpha, TimeForm::quarter_log_n), theta);
      const double form2 = limit_profile(RegimeSpec::critical(alpha, TimeForm::half_log_k),
                                         theta - 0.25 * std::log(alpha));
      EXPECT_NEAR(form1, form2, 2e-10) << "alpha=" << alpha << " theta=" << theta;
    }
  }
  // The opposite shift is not an identity once alpha != 1.
  const double wrong = limit_profile(RegimeSpec::critical(4.0, TimeForm::half_log_k),
                                     0.0 + 0.25 * std::log(4.0));
  EXPECT_GT(std::abs(limit_profile(RegimeSpec::critical(4.0, TimeForm::quarter_log_n), 0.0) - wrong),
            0.05);
}

TEST(LimitProfile, StrictlyDecreasingWithLimits) {
  for (const RegimeSpec& r : {RegimeSpec::large(), RegimeSpec::critical(0.5),
                              RegimeSpec::critical(3.0, TimeForm::quarter_log_n),
                              RegimeSpec::small()}) {
    double previous = 1.0;
    for (double theta = -3.0; theta <= 4.0; theta += 0.25) {
      const double v = limit_profile(r, theta);
      // Near 1 the Poisson series is only resolved to its 1e-10 tolerance.
      if (previous < 1.0 - 1e-9) {
        EXPECT_LT(v, previous);
      } else {
        EXPECT_LE(v, previous + 2e-10);
      }
      previous = v;
    }
    EXPECT_NEAR(limit_profile(r, -20.0), 1.0, 1e-6);
    EXPECT_NEAR(limit_profile(r, 20.0), 0.0, 1e-6);
  }
}

TEST(ConsistencyGap, Examples) {
  EXPECT_LE(consistency_gap(100.0, 0.0).to_gaussian, 0.02);
  EXPECT_LE(consistency_gap(0.001, 0.0).to_gumbel, 0.02);
  const ConsistencyGap g = consistency_gap(1.0, 6.0);
  EXPECT_LE(poisson_tv(1.0 + std::exp(-12.0), 1.0), 0.01);
  EXPECT_LE(g.to_gaussian, 0.01);
  EXPECT_LE(g.to_gumbel, 0.01);
  EXPECT_THROW(consistency_gap(0.0, 0.0), std::domain_error);
}

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace urnlab {

struct SampleSummary {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double std_error = 0.0;
  std::size_t count = 0;
};

SampleSummary summarize(std::span<const double> xs);

/// sup_x |F_n(x) - F(x)| for the empirical CDF of `xs` against `cdf`.
/// `xs` need not be sorted.
double kolmogorov_distance(std::vector<double> xs,
                           const std::function<double(double)>& cdf);

/// Total variation between the histograms of two samples over `bins`
/// equal-width cells spanning the pooled range.
double binned_tv(std::span<const double> a, std::span<const double> b,
                 std::size_t bins);

}  // namespace urnlab

#pragma once

// Closed-form limit profiles for the three scaling regimes of the urn, and the
// discrete/continuous total-variation evaluations they reduce to.

#include <cstdint>
#include <optional>
#include <string_view>

#include "urnlab/pmf.hpp"

namespace urnlab {

inline constexpr double kDefaultSeriesTol = 1e-10;

enum class RegimeKind { large, critical, small };

/// Time parameterization of a cutoff window:
///   quarter_log_n: t = n/4 log n + theta n
///   half_log_k:    t = n/2 log k + theta n
enum class TimeForm { quarter_log_n, half_log_k };

/// Asymptotic regime, classified by k^2/n -> infinity, alpha, or 0.
class RegimeSpec {
 public:
  static RegimeSpec large();
  /// Throws std::domain_error unless alpha > 0 and finite.
  static RegimeSpec critical(double alpha, TimeForm form = TimeForm::half_log_k);
  static RegimeSpec small();

  RegimeKind kind() const noexcept { return kind_; }
  /// Present iff kind() == critical.
  std::optional<double> alpha() const noexcept { return alpha_; }
  TimeForm time_form() const noexcept { return form_; }

  /// The k a ladder for this regime uses at population n:
  /// large n/2, critical ceil(sqrt(alpha n)), small ceil(n^0.3).
  std::int64_t canonical_k(std::int64_t n) const;

  bool operator==(const RegimeSpec&) const = default;

 private:
  RegimeSpec(RegimeKind kind, std::optional<double> alpha, TimeForm form)
      : kind_(kind), alpha_(alpha), form_(form) {}

  RegimeKind kind_;
  std::optional<double> alpha_;
  TimeForm form_;
};

std::string_view to_string(RegimeKind kind) noexcept;
std::string_view to_string(TimeForm form) noexcept;
/// Throws std::invalid_argument on unknown names.
RegimeKind parse_regime_kind(std::string_view name);
TimeForm parse_time_form(std::string_view name);

struct GaussianLaw {
  double mean = 0.0;
  double std = 1.0;

  double cdf(double x) const;
};

/// Standard normal CDF via erfc; absolute error ~1e-16.
double normal_cdf(double x);

/// ||N(m, 1) - N(0, 1)||_TV = 2 Phi(|m|/2) - 1.
double gaussian_shift_tv(double m);

/// ||Pois(lambda1) - Pois(lambda2)||_TV with absolute error <= tol.
/// Throws std::domain_error for negative rates or tol outside (0, 1e-6].
double poisson_tv(double lambda1, double lambda2, double tol = kDefaultSeriesTol);

/// P(G >= x) = 1 - exp(-e^{-x}) for a standard Gumbel G.
double gumbel_tail(double x);
/// P(G <= x) = exp(-e^{-x}).
double gumbel_cdf(double x);

/// Law of Bin(x0, psurv) + Pois(lambda), independent; the time-s law of an
/// M/M/inf queue started at x0. Truncated to mass >= 1 - tol, renormalized.
/// Throws std::domain_error for psurv outside [0, 1], lambda < 0, or tol
/// outside (0, 1e-6].
Pmf binpois_convolution(std::int64_t x0, double psurv, double lambda,
                        double tol = kDefaultSeriesTol);

/// The limiting TV to equilibrium at window coordinate theta:
///   large                     -> gaussian_shift_tv(e^{-2 theta})
///   critical, quarter_log_n   -> poisson_tv(alpha + sqrt(alpha) e^{-2 theta}, alpha)
///   critical, half_log_k      -> poisson_tv(alpha + e^{-2 theta}, alpha)
///   small                     -> gumbel_tail(2 theta)
double limit_profile(const RegimeSpec& regime, double theta,
                     double tol = kDefaultSeriesTol);

struct ConsistencyGap {
  double to_gaussian;
  double to_gumbel;
};

/// How far the critical profile sits from the outer ones at a given alpha:
///   to_gaussian = |poisson_tv(a + sqrt(a) e^{-2t}, a) - gaussian_shift_tv(e^{-2t})|
///   to_gumbel   = |poisson_tv(a + e^{-2t}, a) - gumbel_tail(2t)|
/// Throws std::domain_error unless alpha > 0.
ConsistencyGap consistency_gap(double alpha, double theta,
                               double tol = kDefaultSeriesTol);

}  // namespace urnlab

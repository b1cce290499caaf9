#pragma once

// Reference computations that share no code with the library.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

/// Composite Simpson rule on [a, b] with `panels` (even) subintervals.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int panels = 200000) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

inline double std_normal_density(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

/// C(a, b) as a long double product.
inline long double binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || b > a) return 0.0L;
  long double r = 1.0L;
  for (std::int64_t i = 1; i <= b; ++i) r = r * static_cast<long double>(a - b + i) / i;
  return r;
}

inline double birth(std::int64_t n, std::int64_t k, std::int64_t x) {
  return 2.0 * static_cast<double>((k - x) * (k - x)) / static_cast<double>(n * n);
}

inline double death(std::int64_t n, std::int64_t k, std::int64_t x) {
  return 2.0 * static_cast<double>(x * (n - 2 * k + x)) / static_cast<double>(n * n);
}

using Matrix = std::vector<std::vector<double>>;

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t m = a.size();
  Matrix c(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < m; ++l)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

/// exp(t Q) for the urn generator by scaling and squaring of a Taylor series.
inline Matrix transition_matrix(std::int64_t n, std::int64_t k, double t) {
  const std::size_t m = static_cast<std::size_t>(k + 1);
  Matrix q(m, std::vector<double>(m, 0.0));
  for (std::int64_t x = 0; x <= k; ++x) {
    if (x < k) q[x][x + 1] = birth(n, k, x);
    if (x > 0) q[x][x - 1] = death(n, k, x);
    q[x][x] = -birth(n, k, x) - death(n, k, x);
  }
  int squarings = 0;
  double scale = t;
  while (scale > 0.01) {
    scale /= 2.0;
    ++squarings;
  }
  Matrix result(m, std::vector<double>(m, 0.0));
  Matrix term(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) result[i][i] = term[i][i] = 1.0;
  for (int order = 1; order <= 30; ++order) {
    term = multiply(term, q);
    for (auto& row : term)
      for (double& v : row) v *= scale / order;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) result[i][j] += term[i][j];
  }
  for (int s = 0; s < squarings; ++s) result = multiply(result, result);
  return result;
}

/// Expected hitting time of 0 from every state, by first-step analysis:
/// (b + d) h(x) - b h(x+1) - d h(x-1) = 1 for x >= 1, h(0) = 0.
inline std::vector<double> hitting_times(std::int64_t n, std::int64_t k) {
  // Unknowns h(1..k); tridiagonal solve by elimination.
  const std::size_t m = static_cast<std::size_t>(k);
  std::vector<double> lower(m), diag(m), upper(m), rhs(m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t x = static_cast<std::int64_t>(i) + 1;
    lower[i] = -death(n, k, x);
    diag[i] = birth(n, k, x) + death(n, k, x);
    upper[i] = -birth(n, k, x);
  }
  for (std::size_t i = 1; i < m; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  std::vector<double> h(m + 1, 0.0);
  for (std::size_t i = m; i-- > 0;) {
    const double next = i + 1 < m ? h[i + 2] : 0.0;
    h[i + 1] = (rhs[i] - upper[i] * next) / diag[i];
  }
  return h;
}

}  // namespace oracle

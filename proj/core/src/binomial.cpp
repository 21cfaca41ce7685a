#include "wfai/binomial.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace wfai {

namespace {

// Stirling-series error: lgamma(n + 1) - [(n + 1/2) ln n - n + ln sqrt(2 pi)].
double stirling_error(double n) {
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  if (n < 16.0) {
    return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n -
           0.5 * std::log(2.0 * std::numbers::pi);
  }
  const double n1 = 1.0 / n;
  const double n2 = n1 * n1;
  if (n > 500.0) return (s0 - s1 * n2) * n1;
  if (n > 80.0) return (s0 - (s1 - s2 * n2) * n2) * n1;
  if (n > 35.0) return (s0 - (s1 - (s2 - s3 * n2) * n2) * n2) * n1;
  return (s0 - (s1 - (s2 - (s3 - s4 * n2) * n2) * n2) * n2) * n1;
}

// Deviance term x ln(x / np) + np - x, summed as a series near x = np.
double deviance(double x, double np) {
  if (std::abs(x - np) < 0.1 * (x + np)) {
    const double v = (x - np) / (x + np);
    double sum = (x - np) * v;
    double term = 2.0 * x * v;
    for (int j = 1;; ++j) {
      term *= v * v;
      const double next = sum + term / (2 * j + 1);
      if (next == sum) return next;
      sum = next;
    }
  }
  return x * std::log(x / np) + np - x;
}

}  // namespace

// Saddle-point evaluation (Loader 2000). Differencing lgamma values loses
// absolute precision once lgamma(n + 1) is in the thousands.
double log_binomial_pmf(std::int64_t n, std::int64_t k, double p, double q) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (k < 0 || k > n) return kNegInf;
  if (p <= 0.0) return k == 0 ? 0.0 : kNegInf;
  if (q <= 0.0) return k == n ? 0.0 : kNegInf;
  const double dn = static_cast<double>(n);
  if (k == 0) return dn * std::log(q);
  if (k == n) return dn * std::log(p);
  const double dk = static_cast<double>(k);
  const double rest = dn - dk;
  const double lc = stirling_error(dn) - stirling_error(dk) -
                    stirling_error(rest) - deviance(dk, dn * p) -
                    deviance(rest, dn * q);
  return lc + 0.5 * std::log(dn / (2.0 * std::numbers::pi * dk * rest));
}

double log_binomial_pmf(std::int64_t n, std::int64_t k, double p) {
  return log_binomial_pmf(n, k, p, 1.0 - p);
}

namespace {

// Sequential search from k = 0; p <= 1/2 here.
std::int64_t binomial_inversion(std::int64_t n, double p, RandomStream& rng) {
  const double q = 1.0 - p;
  const double ratio = p / q;
  const double start = std::pow(q, static_cast<double>(n));
  for (;;) {
    double u = rng.uniform();
    double f = start;
    for (std::int64_t k = 0; k <= n; ++k) {
      if (u < f) return k;
      u -= f;
      f *= ratio * static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
    // Rounding left a sliver of mass past n; redraw.
  }
}

// Rejection from a Cauchy envelope centred on the mean; p <= 1/2 and
// n * p > 30 here. Accepted points are floor()ed, so the acceptance
// probability must dominate the pmf on each unit cell.
std::int64_t binomial_rejection(std::int64_t n, double p, RandomStream& rng) {
  const double dn = static_cast<double>(n);
  const double q = 1.0 - p;
  const double mean = dn * p;
  const double scale = std::sqrt(2.0 * mean * q);
  const double log_p = std::log(p);
  const double log_q = std::log(q);
  const double log_n_fact = std::lgamma(dn + 1.0);
  for (;;) {
    double y = 0.0;
    double x = 0.0;
    do {
      y = std::tan(std::numbers::pi * rng.uniform());
      x = scale * y + mean;
    } while (x < 0.0 || x >= dn + 1.0);
    x = std::floor(x);
    const double log_pmf = log_n_fact - std::lgamma(x + 1.0) -
                           std::lgamma(dn - x + 1.0) + x * log_p +
                           (dn - x) * log_q;
    const double accept =
        kBinomialEnvelopeScale * scale * (1.0 + y * y) * std::exp(log_pmf);
    if (rng.uniform() <= accept) return static_cast<std::int64_t>(x);
  }
}

}  // namespace

std::int64_t sample_binomial(std::int64_t n, double p, RandomStream& rng) {
  if (n <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  const bool flip = p > 0.5;
  const double pp = flip ? 1.0 - p : p;
  const std::int64_t k =
      static_cast<double>(n) * pp <= kBinomialInversionCutoff
          ? binomial_inversion(n, pp, rng)
          : binomial_rejection(n, pp, rng);
  return flip ? n - k : k;
}

}  // namespace wfai

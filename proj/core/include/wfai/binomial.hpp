#pragma once

#include <cstdint>

#include "wfai/random.hpp"

namespace wfai {

// Log of the Bin(n, p) pmf at k, accurate to a few ulps of the pmf itself
// for n well beyond 10^6. `q` is 1 - p, passed separately so callers that
// know the complement exactly avoid cancellation. Degenerate p (0 or 1)
// yields 0 or -infinity as appropriate.
double log_binomial_pmf(std::int64_t n, std::int64_t k, double p, double q);
double log_binomial_pmf(std::int64_t n, std::int64_t k, double p);

// Mean threshold below which inversion is used instead of rejection.
inline constexpr double kBinomialInversionCutoff = 30.0;

// Constant of the Cauchy envelope used by the rejection sampler.
inline constexpr double kBinomialEnvelopeScale = 1.2;

// Exact Binomial(n, p) draw. Uses sequential-search inversion when
// n * min(p, 1 - p) <= 30 and Cauchy-envelope rejection otherwise.
std::int64_t sample_binomial(std::int64_t n, double p, RandomStream& rng);

}  // namespace wfai

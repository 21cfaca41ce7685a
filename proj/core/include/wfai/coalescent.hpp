#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wfai/info.hpp"
#include "wfai/random.hpp"

namespace wfai {

// Baseline population size N and alternative size nu. nu is real-valued: it
// only sets the mean of a geometric law, which the rescaled limit nu ~ cN
// needs.
struct CoalescentGeomParams {
  double n_true = 2.0;
  double n_alt = 2.0;

  void validate() const;
};

// P[pairwise coalescence exactly k generations back] = (1 - 1/N)^(k-1) / N.
double geom_coalescence_pmf(double n_pop, std::int64_t k);

// Active information of the event {tau = k} when the assumed size changes
// from N to nu, evaluated in log space:
//   (k-1) [log(1 - 1/nu) - log(1 - 1/N)] + log(N / nu)
InfoValue geom_ai(const CoalescentGeomParams& params, std::int64_t k,
                  LogBase base = LogBase::nats);

// The same quantity in its rearranged form
//   k [log(1 - 1/nu) - log(1 - 1/N)] + log((N - 1) / (nu - 1)).
InfoValue geom_ai_rearranged(const CoalescentGeomParams& params,
                             std::int64_t k, LogBase base = LogBase::nats);

// Large-N limit with k = dN and nu = cN, in nats: (1 - 1/c) d - ln c.
InfoValue geom_ai_limit(double c, double d);

// Rate i(i-1)/2 at which i lineages coalesce to i-1 (time in N generations).
double kingman_rate(std::int64_t lineages);

// Active information, in nats, of {T_i > t} when the baseline Exp(i(i-1)/2)
// holding time is replaced by an exponential with mean mu_alt:
//   t (i(i-1)/2 - 1/mu_alt)
InfoValue kingman_tail_ai(std::int64_t lineages, double mu_alt, double t);

// The same with mu_alt = 2c / (i(i-1)): i(i-1) t / 2 * (1 - 1/c).
InfoValue kingman_tail_ai_scaled(std::int64_t lineages, double c, double t);

// Default cap for pairwise TMRCA simulation: 100 N generations.
std::int64_t default_tmrca_max_gens(std::int64_t n_pop);

// Traces two lineages backwards; each generation both pick a parent
// uniformly from N. Returns the first generation at which they pick the same
// parent, or nullopt when max_gens is exceeded (censored).
std::optional<std::int64_t> sample_pairwise_tmrca(std::int64_t n_pop,
                                                  RandomStream& rng,
                                                  std::int64_t max_gens);

// `samples` independent draws, sample k on RandomStream::derive(seed, k).
std::vector<std::optional<std::int64_t>> sample_pairwise_tmrca_batch(
    std::int64_t n_pop, std::int64_t samples, std::int64_t max_gens,
    std::uint64_t seed, unsigned threads = 1);

}  // namespace wfai

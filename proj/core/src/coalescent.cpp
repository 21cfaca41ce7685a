#include "wfai/coalescent.hpp"

#include <cmath>
#include <string>

#include "wfai/error.hpp"
#include "wfai/parallel.hpp"

namespace wfai {

void CoalescentGeomParams::validate() const {
  if (!(n_true >= 2.0) || !std::isfinite(n_true)) {
    throw InvalidParameter("baseline population size N must be >= 2");
  }
  if (!(n_alt > 1.0) || !std::isfinite(n_alt)) {
    throw InvalidParameter("alternative population size nu must be > 1");
  }
}

namespace {

void check_generation(std::int64_t k) {
  if (k < 1) {
    throw InvalidParameter("generation k must be >= 1, got " +
                           std::to_string(k));
  }
}

void check_lineages(std::int64_t lineages) {
  if (lineages < 2) throw InvalidParameter("lineage count must be >= 2");
}

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidParameter("time t must be finite and >= 0");
  }
}

// log(1 - 1/nu) - log(1 - 1/N)
double log_survival_gap(const CoalescentGeomParams& params) {
  return std::log1p(-1.0 / params.n_alt) - std::log1p(-1.0 / params.n_true);
}

}  // namespace

double geom_coalescence_pmf(double n_pop, std::int64_t k) {
  if (!(n_pop > 1.0)) throw InvalidParameter("N must be > 1");
  check_generation(k);
  return std::exp(static_cast<double>(k - 1) * std::log1p(-1.0 / n_pop) -
                  std::log(n_pop));
}

InfoValue geom_ai(const CoalescentGeomParams& params, std::int64_t k,
                  LogBase base) {
  params.validate();
  check_generation(k);
  const double nats = static_cast<double>(k - 1) * log_survival_gap(params) +
                      std::log(params.n_true / params.n_alt);
  return InfoValue::from_nats(nats, base);
}

InfoValue geom_ai_rearranged(const CoalescentGeomParams& params,
                             std::int64_t k, LogBase base) {
  params.validate();
  check_generation(k);
  const double nats =
      static_cast<double>(k) * log_survival_gap(params) +
      std::log((params.n_true - 1.0) / (params.n_alt - 1.0));
  return InfoValue::from_nats(nats, base);
}

InfoValue geom_ai_limit(double c, double d) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw InvalidParameter("scale c must be positive");
  }
  if (!(d >= 0.0) || !std::isfinite(d)) {
    throw InvalidParameter("rescaled time d must be >= 0");
  }
  return {(1.0 - 1.0 / c) * d - std::log(c), LogBase::nats};
}

double kingman_rate(std::int64_t lineages) {
  check_lineages(lineages);
  const double i = static_cast<double>(lineages);
  return i * (i - 1.0) / 2.0;
}

InfoValue kingman_tail_ai(std::int64_t lineages, double mu_alt, double t) {
  check_lineages(lineages);
  check_time(t);
  if (!(mu_alt > 0.0)) throw InvalidParameter("alternative mean must be > 0");
  return {t * (kingman_rate(lineages) - 1.0 / mu_alt), LogBase::nats};
}

InfoValue kingman_tail_ai_scaled(std::int64_t lineages, double c, double t) {
  check_lineages(lineages);
  check_time(t);
  if (!(c > 0.0)) throw InvalidParameter("scale c must be positive");
  return {kingman_rate(lineages) * t * (1.0 - 1.0 / c), LogBase::nats};
}

std::int64_t default_tmrca_max_gens(std::int64_t n_pop) { return 100 * n_pop; }

std::optional<std::int64_t> sample_pairwise_tmrca(std::int64_t n_pop,
                                                  RandomStream& rng,
                                                  std::int64_t max_gens) {
  if (n_pop < 2) throw InvalidParameter("N must be >= 2");
  if (max_gens < 1) throw InvalidParameter("max_gens must be >= 1");
  const auto n = static_cast<std::uint64_t>(n_pop);
  for (std::int64_t g = 1; g <= max_gens; ++g) {
    const std::uint64_t first = rng.below(n);
    const std::uint64_t second = rng.below(n);
    if (first == second) return g;
  }
  return std::nullopt;
}

std::vector<std::optional<std::int64_t>> sample_pairwise_tmrca_batch(
    std::int64_t n_pop, std::int64_t samples, std::int64_t max_gens,
    std::uint64_t seed, unsigned threads) {
  if (samples < 1) throw InvalidParameter("sample count must be >= 1");
  std::vector<std::optional<std::int64_t>> out(
      static_cast<std::size_t>(samples));
  parallel_for(samples, threads, [&](std::int64_t k) {
    RandomStream rng = RandomStream::derive(seed, static_cast<std::uint64_t>(k));
    out[static_cast<std::size_t>(k)] =
        sample_pairwise_tmrca(n_pop, rng, max_gens);
  });
  return out;
}

}  // namespace wfai

#include "wfai/wf_chain.hpp"

#include <cmath>
#include <algorithm>
#include <string>

#include "wfai/binomial.hpp"
#include "wfai/error.hpp"

namespace wfai {

void WfParams::validate() const {
  if (n_pop < 2) {
    throw InvalidParameter("population size N must be >= 2, got " +
                           std::to_string(n_pop));
  }
  if (!(sel > -1.0) || !std::isfinite(sel)) {
    throw InvalidParameter("selection coefficient s must be finite and > -1");
  }
  if (!(mu_a_to_small >= 0.0 && mu_a_to_small <= 1.0)) {
    throw InvalidParameter("mutation probability mu1 must lie in [0, 1]");
  }
  if (!(mu_small_to_a >= 0.0 && mu_small_to_a <= 1.0)) {
    throw InvalidParameter("mutation probability mu2 must lie in [0, 1]");
  }
}

void WfParams::check_count(AlleleCount i) const {
  if (i < 0 || i > n_pop) {
    throw InvalidParameter("allele count " + std::to_string(i) +
                           " outside [0, " + std::to_string(n_pop) + "]");
  }
}

ProbVector::ProbVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) throw InvalidParameter("probability weight is negative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvalidParameter("probability weights sum to " +
                           std::to_string(total) + ", not 1");
  }
}

double ProbVector::entropy() const {
  double h = 0.0;
  for (double w : weights_) {
    if (w > 0.0) h -= w * std::log(w);
  }
  return h;
}

namespace {

// i(1+s) + N - i, strictly positive whenever s > -1.
double weighted_total(const WfParams& params, AlleleCount i) {
  const double di = static_cast<double>(i);
  return di * params.sel + static_cast<double>(params.n_pop);
}

}  // namespace

SamplingProbs selection_sampling_probs(const WfParams& params, AlleleCount i) {
  params.check_count(i);
  const double di = static_cast<double>(i);
  const double total = weighted_total(params, i);
  return {di * (1.0 + params.sel) / total,
          static_cast<double>(params.n_pop - i) / total};
}

OffspringWeights offspring_weights(const WfParams& params, AlleleCount i) {
  params.check_count(i);
  const double di = static_cast<double>(i);
  const double rest = static_cast<double>(params.n_pop - i);
  const double favored = di * (1.0 + params.sel);
  return {favored * (1.0 - params.mu_a_to_small) + rest * params.mu_small_to_a,
          rest * (1.0 - params.mu_small_to_a) + favored * params.mu_a_to_small,
          weighted_total(params, i)};
}

double theta(const WfParams& params, AlleleCount i) {
  const OffspringWeights w = offspring_weights(params, i);
  return w.big_a / w.total;
}

double theta_complement(const WfParams& params, AlleleCount i) {
  const OffspringWeights w = offspring_weights(params, i);
  return w.small_a / w.total;
}

double log_transition_prob(const WfParams& params, AlleleCount i,
                           AlleleCount j) {
  params.check_count(j);
  return log_binomial_pmf(params.n_pop, j, theta(params, i),
                          theta_complement(params, i));
}

double transition_prob(const WfParams& params, AlleleCount i, AlleleCount j) {
  return std::exp(log_transition_prob(params, i, j));
}

ProbVector transition_row(const WfParams& params, AlleleCount i) {
  const double p = theta(params, i);
  const double q = theta_complement(params, i);
  const std::int64_t n = params.n_pop;
  std::vector<double> row(static_cast<std::size_t>(n + 1));
  for (std::int64_t j = 0; j <= n; ++j) {
    row[static_cast<std::size_t>(j)] = std::exp(log_binomial_pmf(n, j, p, q));
  }
  return ProbVector(std::move(row));
}

ProbVector maxent_initial(std::int64_t n_pop) {
  if (n_pop < 2) {
    throw InvalidParameter("maxent initial law needs N >= 2, got " +
                           std::to_string(n_pop));
  }
  std::vector<double> w(static_cast<std::size_t>(n_pop + 1),
                        1.0 / static_cast<double>(n_pop - 1));
  w.front() = 0.0;
  w.back() = 0.0;
  return ProbVector(std::move(w));
}

AlleleCount step(const WfParams& params, AlleleCount i, RandomStream& rng) {
  const double p = theta(params, i);
  if (p <= 0.0) return 0;
  if (theta_complement(params, i) <= 0.0) return params.n_pop;
  return sample_binomial(params.n_pop, p, rng);
}

std::int64_t default_max_gens(const WfParams& params) {
  return 20 * params.n_pop;
}

Trajectory simulate(const WfParams& params, AlleleCount i0,
                    std::int64_t max_gens, RandomStream& rng,
                    bool stop_on_absorption) {
  params.validate();
  params.check_count(i0);
  if (max_gens < 1) throw InvalidParameter("max_gens must be >= 1");

  const auto absorbing = [&](AlleleCount c) {
    return (c == 0 && params.zero_absorbing()) ||
           (c == params.n_pop && params.full_absorbing());
  };

  Trajectory traj{{}, std::nullopt, params, rng.seed(), rng.stream_index()};
  traj.counts.reserve(static_cast<std::size_t>(
      std::min<std::int64_t>(max_gens + 1, 4 * params.n_pop + 1)));
  traj.counts.push_back(i0);
  if (absorbing(i0)) traj.absorbed_at = Absorption{0, i0};

  AlleleCount current = i0;
  for (std::int64_t g = 1; g <= max_gens; ++g) {
    if (traj.absorbed_at && stop_on_absorption) break;
    current = step(params, current, rng);
    traj.counts.push_back(current);
    if (!traj.absorbed_at && absorbing(current)) {
      traj.absorbed_at = Absorption{g, current};
    }
  }
  return traj;
}

}  // namespace wfai

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wfai/info.hpp"
#include "wfai/wf_chain.hpp"

namespace wfai {

enum class FixationMethod { exact_solve, monte_carlo };

std::string_view to_string(FixationMethod method);

struct FixationResult {
  double p_fix = 0.0;
  FixationMethod method = FixationMethod::exact_solve;

  // Monte Carlo only.
  std::optional<std::int64_t> trials;
  std::optional<std::int64_t> successes;
  std::optional<double> ci_halfwidth;  // 95% normal approximation
  std::optional<std::int64_t> censored;

  // Exact solve only: max_i |h(i) - sum_j P(i,j) h(j)| of the returned vector.
  std::optional<double> residual;

  // Normal-approximation half-width at quantile z (1.96 for 95%).
  // Zero for exact results.
  double half_width(double z) const;
};

struct ExactSolveOptions {
  // Largest N handled by the dense LU solve.
  std::int64_t dense_cap = 2000;
  // Beyond dense_cap: fixed-point iteration h <- P h instead of CapacityError.
  bool allow_iterative = false;
  double relaxation = 1.0;
  double tolerance = 1e-12;
  std::int64_t max_iterations = 50'000'000;
};

struct MonteCarloOptions {
  std::int64_t trials = 100'000;
  // 0 selects default_fixation_max_gens().
  std::int64_t max_gens = 0;
  std::uint64_t seed = 0;
  // 0 selects the hardware concurrency. Results do not depend on this.
  unsigned threads = 1;
};

// 20 N generations without mutation, 50 N with.
std::int64_t default_fixation_max_gens(const WfParams& params);

// Eventual fixation probabilities h(0..N) of the mutation-free chain:
// h(0) = 0, h(N) = 1, h(i) = sum_j P(i,j) h(j).
// Throws UnsupportedParameters with mutation and CapacityError when N exceeds
// dense_cap without allow_iterative.
std::vector<double> solve_fixation_probs(const WfParams& params,
                                         const ExactSolveOptions& options = {});

FixationResult exact_fixation_prob(const WfParams& params, AlleleCount i,
                                   const ExactSolveOptions& options = {});

// max_i |h(i) - sum_j P(i,j) h(j)| over interior states.
double harmonic_residual(const WfParams& params, std::span<const double> h);

// Fraction of independent runs from i that reach N before the generation
// cap. A run fails when it reaches 0 and 0 is absorbing (mu2 = 0); runs that
// do neither are censored and reported separately. Trial t uses the stream
// RandomStream::derive(seed, t).
FixationResult mc_fixation_prob(const WfParams& params, AlleleCount i,
                                const MonteCarloOptions& options);

struct FixationAi {
  InfoBreakdown info;
  FixationResult fixation;
  double p_neutral = 0.0;  // i / N
  // Set when the non-neutral estimate is zero (active = -infinity).
  bool low_count_warning = false;
};

// Active information of eventual fixation against the neutral law i/N.
// Requires 1 <= i <= N-1 (BoundaryEvent otherwise).
FixationAi fixation_ai(const WfParams& params, AlleleCount i, LogBase base,
                       FixationMethod method,
                       const MonteCarloOptions& mc_options = {},
                       const ExactSolveOptions& exact_options = {});

}  // namespace wfai

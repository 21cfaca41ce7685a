#include "wfai/fixation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "wfai/active_info.hpp"
#include "wfai/error.hpp"
#include "wfai/parallel.hpp"

namespace wfai {

std::string_view to_string(FixationMethod method) {
  return method == FixationMethod::exact_solve ? "exact_solve" : "monte_carlo";
}

double FixationResult::half_width(double z) const {
  if (!trials || *trials == 0) return 0.0;
  return z * std::sqrt(p_fix * (1.0 - p_fix) / static_cast<double>(*trials));
}

std::int64_t default_fixation_max_gens(const WfParams& params) {
  return params.mutation_free() ? default_max_gens(params)
                                : 50 * params.n_pop;
}

namespace {

// Row i of the transition matrix restricted to entries above `floor`.
struct BandedRow {
  std::int64_t first = 0;
  std::vector<double> values;
};

BandedRow banded_row(const WfParams& params, AlleleCount i, double floor) {
  const ProbVector full = transition_row(params, i);
  const auto w = full.weights();
  BandedRow row;
  std::size_t first = 0;
  std::size_t last = 0;
  bool any = false;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] > floor) {
      if (!any) first = j;
      last = j;
      any = true;
    }
  }
  row.first = static_cast<std::int64_t>(first);
  row.values.assign(w.begin() + static_cast<std::ptrdiff_t>(first),
                    w.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  return row;
}

std::vector<double> solve_dense(const WfParams& params) {
  const std::int64_t n = params.n_pop;
  const Eigen::Index m = static_cast<Eigen::Index>(n - 1);
  // (I - Q) h = r over interior states 1..N-1, r_i = P(i, N).
  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(m, m);
  Eigen::VectorXd rhs(m);
  for (std::int64_t i = 1; i < n; ++i) {
    const ProbVector row = transition_row(params, i);
    const Eigen::Index r = static_cast<Eigen::Index>(i - 1);
    for (std::int64_t j = 1; j < n; ++j) {
      system(r, static_cast<Eigen::Index>(j - 1)) -=
          row[static_cast<std::size_t>(j)];
    }
    rhs(r) = row[static_cast<std::size_t>(n)];
  }

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
  Eigen::VectorXd h = lu.solve(rhs);
  // A couple of refinement sweeps tighten the harmonic residual at large N.
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::VectorXd resid = rhs - system * h;
    if (resid.lpNorm<Eigen::Infinity>() < 1e-14) break;
    h += lu.solve(resid);
  }

  std::vector<double> out(static_cast<std::size_t>(n + 1));
  out.front() = 0.0;
  out.back() = 1.0;
  for (std::int64_t i = 1; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        std::clamp(h(static_cast<Eigen::Index>(i - 1)), 0.0, 1.0);
  }
  return out;
}

std::vector<double> solve_iterative(const WfParams& params,
                                    const ExactSolveOptions& options) {
  const std::int64_t n = params.n_pop;
  std::vector<BandedRow> rows;
  rows.reserve(static_cast<std::size_t>(n - 1));
  for (std::int64_t i = 1; i < n; ++i) {
    rows.push_back(banded_row(params, i, 1e-18));
  }

  std::vector<double> h(static_cast<std::size_t>(n + 1));
  for (std::int64_t i = 0; i <= n; ++i) {
    h[static_cast<std::size_t>(i)] =
        static_cast<double>(i) / static_cast<double>(n);
  }
  std::vector<double> next = h;
  for (std::int64_t it = 0; it < options.max_iterations; ++it) {
    double change = 0.0;
    for (std::int64_t i = 1; i < n; ++i) {
      const BandedRow& row = rows[static_cast<std::size_t>(i - 1)];
      double acc = 0.0;
      for (std::size_t k = 0; k < row.values.size(); ++k) {
        acc += row.values[k] *
               h[static_cast<std::size_t>(row.first) + k];
      }
      const double prev = h[static_cast<std::size_t>(i)];
      const double updated = prev + options.relaxation * (acc - prev);
      next[static_cast<std::size_t>(i)] = updated;
      change = std::max(change, std::abs(updated - prev));
    }
    h.swap(next);
    if (change < options.tolerance) return h;
  }
  throw CapacityError("fixed-point iteration did not converge within " +
                      std::to_string(options.max_iterations) + " sweeps");
}

}  // namespace

std::vector<double> solve_fixation_probs(const WfParams& params,
                                         const ExactSolveOptions& options) {
  params.validate();
  if (!params.mutation_free()) {
    throw UnsupportedParameters(
        "exact fixation probabilities require mu1 = mu2 = 0");
  }
  if (params.n_pop <= options.dense_cap) return solve_dense(params);
  if (!options.allow_iterative) {
    throw CapacityError("N = " + std::to_string(params.n_pop) +
                        " exceeds the dense solver cap of " +
                        std::to_string(options.dense_cap));
  }
  return solve_iterative(params, options);
}

double harmonic_residual(const WfParams& params, std::span<const double> h) {
  const std::int64_t n = params.n_pop;
  double worst = 0.0;
  for (std::int64_t i = 1; i < n; ++i) {
    const ProbVector row = transition_row(params, i);
    double acc = 0.0;
    for (std::int64_t j = 0; j <= n; ++j) {
      acc += row[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(j)];
    }
    worst = std::max(worst, std::abs(h[static_cast<std::size_t>(i)] - acc));
  }
  return worst;
}

FixationResult exact_fixation_prob(const WfParams& params, AlleleCount i,
                                   const ExactSolveOptions& options) {
  params.validate();
  params.check_count(i);
  const std::vector<double> h = solve_fixation_probs(params, options);
  FixationResult result;
  result.p_fix = h[static_cast<std::size_t>(i)];
  result.method = FixationMethod::exact_solve;
  result.residual = harmonic_residual(params, h);
  return result;
}

namespace {

enum class Outcome : std::uint8_t { failure, success, censored };

Outcome run_to_fixation(const WfParams& params, AlleleCount i0,
                        std::int64_t max_gens, RandomStream& rng) {
  AlleleCount current = i0;
  for (std::int64_t g = 0;; ++g) {
    if (current == params.n_pop) return Outcome::success;
    if (current == 0 && params.zero_absorbing()) return Outcome::failure;
    if (g == max_gens) return Outcome::censored;
    current = step(params, current, rng);
  }
}

}  // namespace

FixationResult mc_fixation_prob(const WfParams& params, AlleleCount i,
                                const MonteCarloOptions& options) {
  params.validate();
  params.check_count(i);
  if (options.trials < 1) throw InvalidParameter("trials must be >= 1");
  const std::int64_t max_gens = options.max_gens > 0
                                    ? options.max_gens
                                    : default_fixation_max_gens(params);

  std::vector<Outcome> outcomes(static_cast<std::size_t>(options.trials));
  parallel_for(options.trials, options.threads, [&](std::int64_t t) {
    RandomStream rng =
        RandomStream::derive(options.seed, static_cast<std::uint64_t>(t));
    outcomes[static_cast<std::size_t>(t)] =
        run_to_fixation(params, i, max_gens, rng);
  });

  const auto successes = std::count(outcomes.begin(), outcomes.end(),
                                    Outcome::success);
  const auto censored = std::count(outcomes.begin(), outcomes.end(),
                                   Outcome::censored);
  FixationResult result;
  result.method = FixationMethod::monte_carlo;
  result.p_fix =
      static_cast<double>(successes) / static_cast<double>(options.trials);
  result.trials = options.trials;
  result.successes = successes;
  result.censored = censored;
  result.ci_halfwidth = result.half_width(1.96);
  return result;
}

FixationAi fixation_ai(const WfParams& params, AlleleCount i, LogBase base,
                       FixationMethod method,
                       const MonteCarloOptions& mc_options,
                       const ExactSolveOptions& exact_options) {
  params.validate();
  params.check_count(i);
  if (i == 0 || i == params.n_pop) {
    throw BoundaryEvent("fixation active information needs 1 <= i <= N-1");
  }
  FixationAi out;
  out.fixation = method == FixationMethod::exact_solve
                     ? exact_fixation_prob(params, i, exact_options)
                     : mc_fixation_prob(params, i, mc_options);
  out.p_neutral = static_cast<double>(i) / static_cast<double>(params.n_pop);
  out.info = active_info_from_probs(out.p_neutral, out.fixation.p_fix, base);
  out.low_count_warning = out.fixation.p_fix == 0.0;
  return out;
}

}  // namespace wfai

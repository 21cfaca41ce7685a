#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wfai/info.hpp"
#include "wfai/random.hpp"
#include "wfai/wf_chain.hpp"

namespace wfai {

// Rescaled parameters of the limiting diffusion; time is measured in units
// of N generations.
struct DiffusionParams {
  double alpha = 0.0;  // N s
  double v1 = 0.0;     // N mu1
  double v2 = 0.0;     // N mu2

  static DiffusionParams from_chain(const WfParams& params);

  void validate() const;
  bool mutation_free() const { return v1 == 0.0 && v2 == 0.0; }
};

// alpha p (1-p) - v1 p + v2 (1-p)
double drift(const DiffusionParams& dp, double p);
// p (1-p)
double variance(double p);

// Probability that the mutation-free diffusion started at p0 is absorbed
// at 1: (1 - exp(-2 alpha p0)) / (1 - exp(-2 alpha)), or p0 when alpha = 0.
// Stable for large |alpha| and continuous through alpha = 0.
double pfix_diffusion(double alpha, double p0);
double log_pfix_diffusion(double alpha, double p0);

// log(pfix_diffusion(alpha, p0) / p0); p0 in {0, 1} throws BoundaryEvent.
InfoValue pfix_ai(double alpha, double p0, LogBase base = LogBase::nats);

// Fixation probability of a single new mutant, p0 = 1/N:
// (1 - exp(-2s)) / (1 - exp(-2Ns)), and 1/N at s = 0.
double new_mutant_pfix(std::int64_t n_pop, double sel);

enum class Regime { deleterious, beneficial, nearly_neutral, unclassified };

std::string_view to_string(Regime regime);

// Cut-offs standing in for "much less than" / "much greater than".
struct RegimeThresholds {
  double max_abs_sel = 0.05;      // |s| << 1
  double min_strength = 5.0;      // N|s| >> 1
  double max_neutral_strength = 0.1;  // N|s| << 1
};

struct RegimeReport {
  Regime regime = Regime::unclassified;
  double p_fix_exact_formula = 0.0;
  // Absent for Regime::unclassified.
  std::optional<double> p_fix_approx;
  std::optional<InfoValue> ai_approx;
};

// Classifies (N, s) and fills the regime's approximations:
//   deleterious:    p ~ 2|s| exp(-2N|s|),  I+ ~ ln(2N|s|) - 2N|s|
//   beneficial:     p ~ 2s,                I+ ~ log(2Ns)
//   nearly neutral: p ~ 1/N,               I+ ~ 0
RegimeReport regime_report(std::int64_t n_pop, double sel,
                           LogBase base = LogBase::nats,
                           const RegimeThresholds& thresholds = {});

struct SdePath {
  double dt = 0.0;
  std::vector<double> values;  // values[k] is the state at time k * dt
  // Step index and boundary (0 or 1) of absorption, mutation-free only.
  std::optional<std::int64_t> absorbed_step;
  std::optional<double> absorbed_state;
};

// Euler-Maruyama path of dX = mu(X) dt + sigma(X) dB with the state clamped
// to [0, 1] after each step. Without mutation the boundaries absorb and the
// path stops at the absorption time.
SdePath sde_simulate(const DiffusionParams& dp, double p0, double dt,
                     double t_max, RandomStream& rng);

struct SdeFixationSummary {
  std::int64_t paths = 0;
  std::int64_t absorbed_at_one = 0;
  std::int64_t absorbed_at_zero = 0;
  std::int64_t censored = 0;

  double fraction_at_one() const;
  // Binomial standard error of fraction_at_one().
  double std_error() const;
};

// Runs `paths` independent mutation-free paths, path k on
// RandomStream::derive(seed, k), and counts where they were absorbed.
SdeFixationSummary sde_fixation_mc(const DiffusionParams& dp, double p0,
                                   double dt, double t_max, std::int64_t paths,
                                   std::uint64_t seed, unsigned threads = 1);

}  // namespace wfai

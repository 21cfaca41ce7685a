#include "wfai/diffusion.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wfai/error.hpp"
#include "wfai/parallel.hpp"

namespace wfai {

DiffusionParams DiffusionParams::from_chain(const WfParams& params) {
  const double n = static_cast<double>(params.n_pop);
  return {n * params.sel, n * params.mu_a_to_small, n * params.mu_small_to_a};
}

void DiffusionParams::validate() const {
  if (!std::isfinite(alpha)) throw InvalidParameter("alpha must be finite");
  if (!(v1 >= 0.0) || !(v2 >= 0.0) || !std::isfinite(v1) ||
      !std::isfinite(v2)) {
    throw InvalidParameter("rescaled mutation rates v1, v2 must be >= 0");
  }
}

namespace {

void check_frequency(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameter("frequency must lie in [0, 1], got " +
                           std::to_string(p));
  }
}

constexpr double kSeriesCutoff = 1e-8;

// log(expm1(x)) for x > 0 without overflow.
double log_expm1(double x) {
  return x > 30.0 ? x + std::log1p(-std::exp(-x)) : std::log(std::expm1(x));
}

// log of (1 - exp(-2a)) / (1 - exp(-2b)) for a, b of the same sign, b != 0.
// Covers pfix(alpha, p0) with a = alpha p0, b = alpha.
double log_fixation_ratio(double a, double b) {
  if (a == 0.0) return -std::numeric_limits<double>::infinity();
  if (b > 0.0) {
    // Both factors in (0, 1]; -expm1(-2x) is accurate for all x > 0.
    return std::log(-std::expm1(-2.0 * a)) - std::log(-std::expm1(-2.0 * b));
  }
  // b < 0: ratio = expm1(2|a|) / expm1(2|b|).
  return log_expm1(-2.0 * a) - log_expm1(-2.0 * b);
}

}  // namespace

double drift(const DiffusionParams& dp, double p) {
  check_frequency(p);
  return dp.alpha * p * (1.0 - p) - dp.v1 * p + dp.v2 * (1.0 - p);
}

double variance(double p) {
  check_frequency(p);
  return p * (1.0 - p);
}

double log_pfix_diffusion(double alpha, double p0) {
  check_frequency(p0);
  if (!std::isfinite(alpha)) throw InvalidParameter("alpha must be finite");
  if (p0 == 0.0) return -std::numeric_limits<double>::infinity();
  if (p0 == 1.0) return 0.0;
  if (std::abs(alpha) < kSeriesCutoff) {
    return std::log(p0) + std::log1p(alpha * (1.0 - p0));
  }
  return log_fixation_ratio(alpha * p0, alpha);
}

double pfix_diffusion(double alpha, double p0) {
  check_frequency(p0);
  if (!std::isfinite(alpha)) throw InvalidParameter("alpha must be finite");
  if (p0 == 0.0) return 0.0;
  if (p0 == 1.0) return 1.0;
  if (std::abs(alpha) < kSeriesCutoff) {
    return p0 + alpha * p0 * (1.0 - p0);
  }
  if (alpha > 0.0) {
    return std::expm1(-2.0 * alpha * p0) / std::expm1(-2.0 * alpha);
  }
  return std::exp(log_fixation_ratio(alpha * p0, alpha));
}

InfoValue pfix_ai(double alpha, double p0, LogBase base) {
  check_frequency(p0);
  if (p0 == 0.0 || p0 == 1.0) {
    throw BoundaryEvent("fixation active information needs 0 < p0 < 1");
  }
  if (std::abs(alpha) < kSeriesCutoff) {
    return InfoValue::from_nats(std::log1p(alpha * (1.0 - p0)), base);
  }
  return InfoValue::from_nats(log_pfix_diffusion(alpha, p0) - std::log(p0),
                              base);
}

double new_mutant_pfix(std::int64_t n_pop, double sel) {
  if (n_pop < 2) throw InvalidParameter("N must be >= 2");
  if (!std::isfinite(sel)) throw InvalidParameter("s must be finite");
  const double n = static_cast<double>(n_pop);
  const double strength = n * sel;
  if (std::abs(strength) < kSeriesCutoff) {
    const double p0 = 1.0 / n;
    return p0 + strength * p0 * (1.0 - p0);
  }
  if (sel > 0.0) return std::expm1(-2.0 * sel) / std::expm1(-2.0 * strength);
  return std::exp(log_fixation_ratio(sel, strength));
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::deleterious:
      return "deleterious";
    case Regime::beneficial:
      return "beneficial";
    case Regime::nearly_neutral:
      return "nearly_neutral";
    case Regime::unclassified:
      break;
  }
  return "unclassified";
}

RegimeReport regime_report(std::int64_t n_pop, double sel, LogBase base,
                           const RegimeThresholds& thresholds) {
  RegimeReport report;
  report.p_fix_exact_formula = new_mutant_pfix(n_pop, sel);
  const double n = static_cast<double>(n_pop);
  const double abs_s = std::abs(sel);
  const double strength = n * abs_s;

  if (strength <= thresholds.max_neutral_strength) {
    report.regime = Regime::nearly_neutral;
    report.p_fix_approx = 1.0 / n;
    report.ai_approx = InfoValue::from_nats(0.0, base);
  } else if (sel < 0.0 && abs_s <= thresholds.max_abs_sel &&
             strength >= thresholds.min_strength) {
    report.regime = Regime::deleterious;
    report.p_fix_approx = 2.0 * abs_s * std::exp(-2.0 * strength);
    report.ai_approx =
        InfoValue::from_nats(std::log(2.0 * strength) - 2.0 * strength, base);
  } else if (sel > 0.0 && sel <= thresholds.max_abs_sel &&
             strength >= thresholds.min_strength) {
    report.regime = Regime::beneficial;
    report.p_fix_approx = 2.0 * sel;
    report.ai_approx = InfoValue::from_nats(std::log(2.0 * strength), base);
  }
  return report;
}

namespace {

// Steps the clamped Euler-Maruyama scheme; `observe(step, x)` sees every
// state including the initial one. Returns the absorbing boundary, if any.
template <class Observe>
std::optional<std::pair<std::int64_t, double>> run_sde(
    const DiffusionParams& dp, double p0, double dt, double t_max,
    RandomStream& rng, Observe&& observe) {
  dp.validate();
  check_frequency(p0);
  if (!(dt > 0.0) || !(t_max > 0.0)) {
    throw InvalidParameter("dt and t_max must be positive");
  }
  const bool absorbing = dp.mutation_free();
  const auto steps = static_cast<std::int64_t>(std::ceil(t_max / dt - 1e-9));
  const double sqrt_dt = std::sqrt(dt);
  double x = p0;
  observe(0, x);
  if (absorbing && (x == 0.0 || x == 1.0)) return std::pair{0, x};
  for (std::int64_t k = 1; k <= steps; ++k) {
    const double mu = dp.alpha * x * (1.0 - x) - dp.v1 * x + dp.v2 * (1.0 - x);
    const double sigma = std::sqrt(x * (1.0 - x));
    x += mu * dt + sigma * sqrt_dt * rng.normal();
    x = std::clamp(x, 0.0, 1.0);
    observe(k, x);
    if (absorbing && (x == 0.0 || x == 1.0)) return std::pair{k, x};
  }
  return std::nullopt;
}

}  // namespace

SdePath sde_simulate(const DiffusionParams& dp, double p0, double dt,
                     double t_max, RandomStream& rng) {
  SdePath path;
  path.dt = dt;
  const auto hit = run_sde(dp, p0, dt, t_max, rng,
                           [&](std::int64_t, double x) {
                             path.values.push_back(x);
                           });
  if (hit) {
    path.absorbed_step = hit->first;
    path.absorbed_state = hit->second;
  }
  return path;
}

double SdeFixationSummary::fraction_at_one() const {
  return paths > 0 ? static_cast<double>(absorbed_at_one) /
                         static_cast<double>(paths)
                   : 0.0;
}

double SdeFixationSummary::std_error() const {
  if (paths == 0) return 0.0;
  const double f = fraction_at_one();
  return std::sqrt(f * (1.0 - f) / static_cast<double>(paths));
}

SdeFixationSummary sde_fixation_mc(const DiffusionParams& dp, double p0,
                                   double dt, double t_max, std::int64_t paths,
                                   std::uint64_t seed, unsigned threads) {
  if (paths < 1) throw InvalidParameter("path count must be >= 1");
  if (!dp.mutation_free()) {
    throw UnsupportedParameters(
        "absorption counts need v1 = v2 = 0; boundaries are not absorbing");
  }
  dp.validate();
  check_frequency(p0);
  // 0: at zero, 1: at one, 2: censored.
  std::vector<std::uint8_t> where(static_cast<std::size_t>(paths));
  parallel_for(paths, threads, [&](std::int64_t k) {
    RandomStream rng = RandomStream::derive(seed, static_cast<std::uint64_t>(k));
    const auto hit =
        run_sde(dp, p0, dt, t_max, rng, [](std::int64_t, double) {});
    where[static_cast<std::size_t>(k)] =
        !hit ? 2 : (hit->second == 1.0 ? 1 : 0);
  });
  SdeFixationSummary summary;
  summary.paths = paths;
  for (std::uint8_t w : where) {
    if (w == 0) ++summary.absorbed_at_zero;
    if (w == 1) ++summary.absorbed_at_one;
    if (w == 2) ++summary.censored;
  }
  return summary;
}

}  // namespace wfai

#include "wfai/active_info.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wfai/error.hpp"

namespace wfai {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// -log p with -log 0 = +inf.
double surprisal(double p) { return p > 0.0 ? -std::log(p) : kInf; }

void require_interior(const WfParams& params, AlleleCount i) {
  params.validate();
  params.check_count(i);
  if (i == 0 || i == params.n_pop) {
    throw BoundaryEvent("allele count " + std::to_string(i) +
                        " is a boundary state; use active_info_from_probs");
  }
}

// count * log(ratio) with 0 * log(0) = 0.
double weighted_log(double count, double numerator, double denominator) {
  if (count == 0.0) return 0.0;
  if (numerator <= 0.0) return -kInf;
  return count * std::log(numerator / denominator);
}

}  // namespace

InfoBreakdown active_info_from_probs(double p_null, double p_alt,
                                     LogBase base) {
  if (!(p_null >= 0.0 && p_null <= 1.0) || !(p_alt >= 0.0 && p_alt <= 1.0)) {
    throw InvalidParameter("event probabilities must lie in [0, 1]");
  }
  if (p_null == 0.0 && p_alt == 0.0) {
    throw UndefinedEvent(
        "event has probability zero under both the null and the alternative");
  }
  const double endo = surprisal(p_null);
  const double exo = surprisal(p_alt);
  double active = 0.0;
  if (p_null == 0.0) {
    active = kInf;
  } else if (p_alt == 0.0) {
    active = -kInf;
  } else {
    active = std::log(p_alt / p_null);
  }
  return {InfoValue::from_nats(endo, base), InfoValue::from_nats(exo, base),
          InfoValue::from_nats(active, base)};
}

InfoValue single_draw_ai(const WfParams& params, AlleleCount i, LogBase base) {
  require_interior(params, i);
  const OffspringWeights w = offspring_weights(params, i);
  const double n = static_cast<double>(params.n_pop);
  const double di = static_cast<double>(i);
  // theta / (i/N) = big_a N / (total i); exactly 1 in the neutral case.
  const double nats = weighted_log(1.0, w.big_a * n, w.total * di);
  return InfoValue::from_nats(nats, base);
}

InfoValue offspring_event_ai(const WfParams& params, AlleleCount i,
                             AlleleCount j, LogBase base) {
  require_interior(params, i);
  params.check_count(j);
  const OffspringWeights w = offspring_weights(params, i);
  const double n = static_cast<double>(params.n_pop);
  const double di = static_cast<double>(i);
  const double dj = static_cast<double>(j);
  const double nats = weighted_log(dj, w.big_a * n, w.total * di) +
                      weighted_log(n - dj, w.small_a * n, w.total * (n - di));
  return InfoValue::from_nats(nats, base);
}

InfoValue one_step_fixation_ai(const WfParams& params, AlleleCount i,
                               LogBase base) {
  require_interior(params, i);
  if (!params.mutation_free()) {
    throw UnsupportedParameters(
        "one-step fixation closed form holds only without mutation");
  }
  const double n = static_cast<double>(params.n_pop);
  const double di = static_cast<double>(i);
  return InfoValue::from_nats(
      n * std::log((n + n * params.sel) / (n + di * params.sel)), base);
}

namespace closed_form {

InfoValue single_draw_ai(std::int64_t n, AlleleCount i, double s,
                         LogBase base) {
  const double dn = static_cast<double>(n);
  const double di = static_cast<double>(i);
  return InfoValue::from_nats(std::log((dn + dn * s) / (dn + di * s)), base);
}

InfoValue offspring_event_ai(std::int64_t n, AlleleCount i, AlleleCount j,
                             double s, LogBase base) {
  const double dn = static_cast<double>(n);
  const double di = static_cast<double>(i);
  const double dj = static_cast<double>(j);
  return InfoValue::from_nats(
      dj * std::log1p(s) + dn * std::log(dn / (dn + di * s)), base);
}

}  // namespace closed_form

}  // namespace wfai

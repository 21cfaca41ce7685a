#pragma once

#include "wfai/info.hpp"
#include "wfai/wf_chain.hpp"

namespace wfai {

// Active information of an event with probability p_null under the neutral
// baseline and p_alt under the alternative:
//   endogenous = -log p_null, exogenous = -log p_alt,
//   active     = log(p_alt / p_null).
// A zero probability on one side gives a signed infinity. Throws
// UndefinedEvent when both are zero and InvalidParameter outside [0, 1].
InfoBreakdown active_info_from_probs(double p_null, double p_alt,
                                     LogBase base = LogBase::nats);

// Drawing a single A allele: log(theta_i / (i/N)).
// Requires 1 <= i <= N-1, else BoundaryEvent.
InfoValue single_draw_ai(const WfParams& params, AlleleCount i,
                         LogBase base = LogBase::nats);

// Obtaining exactly j A alleles in the next generation given i now:
//   j log(theta_i / (i/N)) + (N-j) log((1-theta_i) / (1-i/N)).
// The binomial coefficients cancel. theta_i in {0, 1} with an incompatible j
// yields -infinity.
InfoValue offspring_event_ai(const WfParams& params, AlleleCount i,
                             AlleleCount j, LogBase base = LogBase::nats);

// One-step fixation (j = N) without mutation: N log((N + Ns) / (N + is)).
// Throws UnsupportedParameters when either mutation probability is nonzero.
InfoValue one_step_fixation_ai(const WfParams& params, AlleleCount i,
                               LogBase base = LogBase::nats);

// Selection-only closed forms, written directly in (N, i, s). These are
// algebraically equal to the theta-based routes above when mu1 = mu2 = 0 and
// are kept separate so the two can be checked against each other.
namespace closed_form {

// log((N + Ns) / (N + is))
InfoValue single_draw_ai(std::int64_t n, AlleleCount i, double s,
                         LogBase base = LogBase::nats);

// j log(1 + s) + N log(N / (N + is))
InfoValue offspring_event_ai(std::int64_t n, AlleleCount i, AlleleCount j,
                             double s, LogBase base = LogBase::nats);

}  // namespace closed_form

}  // namespace wfai

#include "commands.hpp"

#include <cmath>

#include "wfai/parallel.hpp"
#include "wfai/wfai.hpp"

namespace wfai::cli {
namespace {

// Flag builders. Names follow the command-line spelling without "--".
Flag required(std::string name, Kind kind, std::string help) {
  return {std::move(name), kind, std::move(help), "", true};
}
Flag optional(std::string name, Kind kind, std::string help,
              std::string fallback = "") {
  return {std::move(name), kind, std::move(help), std::move(fallback), false};
}

Flag pop_size() { return required("N", Kind::integer, "population size N"); }
Flag count_i() { return required("i", Kind::integer, "current A-allele count"); }
Flag sel() { return required("s", Kind::real, "selection coefficient s"); }
Flag mu1() {
  return optional("mu1", Kind::real, "mutation probability A -> a", "0");
}
Flag mu2() {
  return optional("mu2", Kind::real, "mutation probability a -> A", "0");
}
Flag base() {
  return optional("base", Kind::text, "information unit: bits or nats", "nats");
}
Flag max_gens() {
  return optional("max-gens", Kind::integer,
                  "generation cap (default depends on the subcommand)");
}
Flag trials(std::string fallback) {
  return optional("trials", Kind::integer, "number of independent runs",
                  std::move(fallback));
}

WfParams chain_params(const Point& p) {
  WfParams params{p.integer("N"), p.real("s"), p.real("mu1"), p.real("mu2")};
  params.validate();
  return params;
}

std::string unit(const Point& p) {
  return std::string(to_string(p.base()));
}

Value optional_value(const std::optional<double>& v) {
  return v ? Value(*v) : Value(std::monostate{});
}
Value optional_value(const std::optional<std::int64_t>& v) {
  return v ? Value(*v) : Value(std::monostate{});
}

std::int64_t positive(const Point& p, const std::string& name) {
  const std::int64_t v = p.integer(name);
  if (v < 1) {
    throw InvalidParameter("--" + name + " must be >= 1, got " +
                           std::to_string(v));
  }
  return v;
}

std::int64_t cap_or(const Point& p, std::int64_t fallback) {
  return p.has("max-gens") ? positive(p, "max-gens") : fallback;
}

unsigned workers(const RunContext& ctx) { return ctx.threads; }

std::uint64_t seed_of(const RunContext& ctx) {
  if (!ctx.seed) throw std::logic_error("stochastic command without a seed");
  return *ctx.seed;
}

bool always(const Point&) { return true; }

// ---------------------------------------------------------------- simulate

void check_simulate(const Point& p) {
  const WfParams params = chain_params(p);
  params.check_count(p.integer("i"));
  positive(p, "replicates");
  cap_or(p, 1);
}

void run_simulate(const Point& p, const RunContext& ctx, const Emit& emit) {
  const WfParams params = chain_params(p);
  const AlleleCount i0 = p.integer("i");
  params.check_count(i0);
  const std::int64_t replicates = positive(p, "replicates");
  const std::int64_t cap = cap_or(p, default_max_gens(params));
  const bool stop = !p.toggle("no-stop");
  const bool trace = p.toggle("trace");
  const auto n = static_cast<double>(params.n_pop);

  std::vector<Trajectory> runs(static_cast<std::size_t>(replicates));
  parallel_for(replicates, workers(ctx), [&](std::int64_t r) {
    RandomStream rng =
        RandomStream::derive(seed_of(ctx), static_cast<std::uint64_t>(r));
    runs[static_cast<std::size_t>(r)] = simulate(params, i0, cap, rng, stop);
  });

  for (std::int64_t r = 0; r < replicates; ++r) {
    const Trajectory& run = runs[static_cast<std::size_t>(r)];
    if (trace) {
      for (std::size_t g = 0; g < run.counts.size(); ++g) {
        const auto gen = static_cast<std::int64_t>(g);
        emit({{"replicate", r},
              {"generation", gen},
              {"time_n_generations", static_cast<double>(gen) / n},
              {"count", run.counts[g]},
              {"frequency", static_cast<double>(run.counts[g]) / n}},
             {});
      }
      continue;
    }
    const auto generations = static_cast<std::int64_t>(run.counts.size()) - 1;
    Value absorbed_gen, absorbed_state, absorbed_time;
    if (run.absorbed_at) {
      absorbed_gen = run.absorbed_at->generation;
      absorbed_state = run.absorbed_at->state;
      absorbed_time = static_cast<double>(run.absorbed_at->generation) / n;
    }
    emit({{"replicate", r},
          {"generations", generations},
          {"final_count", run.counts.back()},
          {"absorbed", run.absorbed_at.has_value()},
          {"absorption_generation", absorbed_gen},
          {"absorbed_state", absorbed_state},
          {"absorption_time_n_generations", absorbed_time}},
         {});
  }
}

// ----------------------------------------------------------------- actinfo

void run_single_draw(const Point& p, const RunContext&, const Emit& emit) {
  const WfParams params = chain_params(p);
  const AlleleCount i = p.integer("i");
  const LogBase b = p.base();
  const InfoValue ai = single_draw_ai(params, i, b);
  Value closed;
  if (params.mutation_free()) {
    closed = closed_form::single_draw_ai(params.n_pop, i, params.sel, b).value;
  }
  emit({{"theta", theta(params, i)},
        {"neutral_prob",
         static_cast<double>(i) / static_cast<double>(params.n_pop)},
        {"active_" + unit(p), ai.value},
        {"closed_form_active_" + unit(p), closed}},
       {});
}

void run_offspring(const Point& p, const RunContext&, const Emit& emit) {
  const WfParams params = chain_params(p);
  const AlleleCount i = p.integer("i");
  const AlleleCount j = p.integer("j");
  const LogBase b = p.base();
  const InfoValue ai = offspring_event_ai(params, i, j, b);
  Value closed;
  if (params.mutation_free()) {
    closed =
        closed_form::offspring_event_ai(params.n_pop, i, j, params.sel, b)
            .value;
  }
  emit({{"p_alt", transition_prob(params, i, j)},
        {"p_null", transition_prob(WfParams::neutral(params.n_pop), i, j)},
        {"active_" + unit(p), ai.value},
        {"closed_form_active_" + unit(p), closed}},
       {});
}

void run_one_step(const Point& p, const RunContext&, const Emit& emit) {
  const WfParams params = chain_params(p);
  const AlleleCount i = p.integer("i");
  const LogBase b = p.base();
  const InfoValue ai = one_step_fixation_ai(params, i, b);
  emit({{"active_" + unit(p), ai.value},
        {"single_draw_active_" + unit(p), single_draw_ai(params, i, b).value}},
       {});
}

void run_from_probs(const Point& p, const RunContext&, const Emit& emit) {
  const InfoBreakdown info =
      active_info_from_probs(p.real("p-null"), p.real("p-alt"), p.base());
  emit({{"endogenous_" + unit(p), info.endogenous.value},
        {"exogenous_" + unit(p), info.exogenous.value},
        {"active_" + unit(p), info.active.value}},
       {});
}

// ---------------------------------------------------------------- fixation

ExactSolveOptions exact_options(const Point& p) {
  ExactSolveOptions options;
  options.allow_iterative = p.toggle("iterative");
  return options;
}

void check_exact(const WfParams& params, AlleleCount i,
                 const ExactSolveOptions& options) {
  params.check_count(i);
  if (!params.mutation_free()) {
    throw UnsupportedParameters(
        "the exact solve needs mu1 = mu2 = 0 (fixation is not absorbing "
        "under mutation)");
  }
  if (params.n_pop > options.dense_cap && !options.allow_iterative) {
    throw CapacityError("N = " + std::to_string(params.n_pop) +
                        " exceeds the dense solver cap; pass --iterative");
  }
}

void check_fixation_exact(const Point& p) {
  check_exact(chain_params(p), p.integer("i"), exact_options(p));
}

void run_fixation_exact(const Point& p, const RunContext&, const Emit& emit) {
  const WfParams params = chain_params(p);
  const AlleleCount i = p.integer("i");
  const ExactSolveOptions options = exact_options(p);
  check_exact(params, i, options);
  const FixationResult r = exact_fixation_prob(params, i, options);
  emit({{"p_fix", r.p_fix},
        {"p_neutral",
         static_cast<double>(i) / static_cast<double>(params.n_pop)},
        {"residual", optional_value(r.residual)}},
       {});
}

MonteCarloOptions mc_options(const Point& p, const RunContext& ctx,
                             const WfParams& params) {
  MonteCarloOptions options;
  options.trials = positive(p, "trials");
  options.max_gens = cap_or(p, default_fixation_max_gens(params));
  options.seed = ctx.seed.value_or(0);
  options.threads = workers(ctx);
  return options;
}

void check_fixation_mc(const Point& p) {
  const WfParams params = chain_params(p);
  params.check_count(p.integer("i"));
  positive(p, "trials");
  cap_or(p, 1);
}

void run_fixation_mc(const Point& p, const RunContext& ctx, const Emit& emit) {
  const WfParams params = chain_params(p);
  const MonteCarloOptions options = mc_options(p, ctx, params);
  const FixationResult r = mc_fixation_prob(params, p.integer("i"), options);
  emit({{"p_fix", r.p_fix},
        {"successes", optional_value(r.successes)},
        {"ci_halfwidth", optional_value(r.ci_halfwidth)},
        {"effective_max_gens", options.max_gens}},
       {{"censored", optional_value(r.censored)}});
}

FixationMethod method_of(const Point& p) {
  const std::string& m = p.text("method");
  if (m == "exact") return FixationMethod::exact_solve;
  if (m == "mc") return FixationMethod::monte_carlo;
  throw UsageError("--method: expected exact or mc, got '" + m + "'");
}

bool fixation_ai_stochastic(const Point& p) {
  return method_of(p) == FixationMethod::monte_carlo;
}

void check_fixation_ai(const Point& p) {
  const WfParams params = chain_params(p);
  const AlleleCount i = p.integer("i");
  params.check_count(i);
  if (i == 0 || i == params.n_pop) {
    throw BoundaryEvent("fixation active information needs 1 <= i <= N-1");
  }
  p.base();
  if (method_of(p) == FixationMethod::exact_solve) {
    check_exact(params, i, exact_options(p));
  } else {
    positive(p, "trials");
    cap_or(p, 1);
  }
}

void run_fixation_ai(const Point& p, const RunContext& ctx, const Emit& emit) {
  check_fixation_ai(p);
  const WfParams params = chain_params(p);
  const FixationMethod method = method_of(p);
  MonteCarloOptions mc;
  if (method == FixationMethod::monte_carlo) mc = mc_options(p, ctx, params);
  const FixationAi r = fixation_ai(params, p.integer("i"), p.base(), method,
                                   mc, exact_options(p));
  const std::string u = unit(p);
  emit({{"p_fix", r.fixation.p_fix},
        {"p_neutral", r.p_neutral},
        {"endogenous_" + u, r.info.endogenous.value},
        {"exogenous_" + u, r.info.exogenous.value},
        {"active_" + u, r.info.active.value},
        {"ci_halfwidth", optional_value(r.fixation.ci_halfwidth)},
        {"low_count_warning", r.low_count_warning}},
       {{"censored", optional_value(r.fixation.censored)}});
}

struct VsDiffusionSetup {
  WfParams params;
  AlleleCount i;
  double alpha;
  double p0;
};

VsDiffusionSetup vs_diffusion_setup(const Point& p) {
  VsDiffusionSetup setup;
  const std::int64_t n = p.integer("N");
  setup.alpha = p.real("alpha");
  setup.p0 = p.real("p0");
  if (n < 2) {
    throw InvalidParameter("population size N must be >= 2, got " +
                           std::to_string(n));
  }
  if (!(setup.p0 >= 0.0 && setup.p0 <= 1.0)) {
    throw InvalidParameter("frequency p0 must lie in [0, 1]");
  }
  setup.params = WfParams::selection(n, setup.alpha / static_cast<double>(n));
  setup.params.validate();
  // ceil(p0 N), guarded against p0 N landing a hair above an integer.
  setup.i = static_cast<AlleleCount>(
      std::ceil(setup.p0 * static_cast<double>(n) - 1e-9));
  check_exact(setup.params, setup.i, exact_options(p));
  return setup;
}

void run_vs_diffusion(const Point& p, const RunContext&, const Emit& emit) {
  const VsDiffusionSetup setup = vs_diffusion_setup(p);
  const double chain =
      exact_fixation_prob(setup.params, setup.i, exact_options(p)).p_fix;
  const double limit = pfix_diffusion(setup.alpha, setup.p0);
  emit({{"i", setup.i},
        {"s", setup.params.sel},
        {"p_fix_exact", chain},
        {"p_fix_diffusion", limit},
        {"abs_gap", std::abs(chain - limit)}},
       {});
}

// --------------------------------------------------------------- diffusion

DiffusionParams diffusion_params(const Point& p) {
  DiffusionParams dp{p.real("alpha"), p.real("v1"), p.real("v2")};
  dp.validate();
  return dp;
}

Flag v1() {
  return optional("v1", Kind::real, "rescaled mutation rate N mu1", "0");
}
Flag v2() {
  return optional("v2", Kind::real, "rescaled mutation rate N mu2", "0");
}
Flag alpha() { return required("alpha", Kind::real, "rescaled selection N s"); }
Flag p0(std::string help = "initial A-allele frequency") {
  return required("p0", Kind::real, std::move(help));
}

void run_drift(const Point& p, const RunContext&, const Emit& emit) {
  const DiffusionParams dp = diffusion_params(p);
  const double x = p.real("p0");
  emit({{"drift", drift(dp, x)}, {"variance", variance(x)}}, {});
}

void run_pfix(const Point& p, const RunContext&, const Emit& emit) {
  emit({{"p_fix", pfix_diffusion(p.real("alpha"), p.real("p0"))}}, {});
}

void run_pfix_ai(const Point& p, const RunContext&, const Emit& emit) {
  const double a = p.real("alpha");
  const double x = p.real("p0");
  const InfoValue ai = pfix_ai(a, x, p.base());
  emit({{"p_fix", pfix_diffusion(a, x)}, {"active_" + unit(p), ai.value}}, {});
}

void run_new_mutant(const Point& p, const RunContext&, const Emit& emit) {
  const std::int64_t n = p.integer("N");
  const double s = p.real("s");
  const double pf = new_mutant_pfix(n, s);
  const double neutral = 1.0 / static_cast<double>(n);
  const InfoBreakdown info = active_info_from_probs(neutral, pf, p.base());
  emit({{"p_fix", pf},
        {"p_neutral", neutral},
        {"active_" + unit(p), info.active.value}},
       {});
}

void run_regime(const Point& p, const RunContext&, const Emit& emit) {
  const std::int64_t n = p.integer("N");
  const LogBase b = p.base();
  const RegimeReport r = regime_report(n, p.real("s"), b);
  const double neutral = 1.0 / static_cast<double>(n);
  const InfoBreakdown exact =
      active_info_from_probs(neutral, r.p_fix_exact_formula, b);
  Value ai_approx;
  if (r.ai_approx) ai_approx = r.ai_approx->value;
  emit({{"regime", std::string(to_string(r.regime))},
        {"p_fix", r.p_fix_exact_formula},
        {"p_fix_approx", optional_value(r.p_fix_approx)},
        {"active_" + unit(p), exact.active.value},
        {"active_approx_" + unit(p), ai_approx}},
       {});
}

void check_sde(const Point& p) {
  diffusion_params(p);
  const double x = p.real("p0");
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidParameter("frequency p0 must lie in [0, 1]");
  }
  if (!(p.real("dt") > 0.0) || !(p.real("t-max") > 0.0)) {
    throw InvalidParameter("dt and t_max must be positive");
  }
}

void run_sde(const Point& p, const RunContext& ctx, const Emit& emit) {
  check_sde(p);
  RandomStream rng = RandomStream::derive(seed_of(ctx), 0);
  const SdePath path = sde_simulate(diffusion_params(p), p.real("p0"),
                                    p.real("dt"), p.real("t-max"), rng);
  for (std::size_t k = 0; k < path.values.size(); ++k) {
    emit({{"step", static_cast<std::int64_t>(k)},
          {"t", static_cast<double>(k) * path.dt},
          {"p", path.values[k]}},
         {});
  }
}

void check_sde_fixation(const Point& p) {
  check_sde(p);
  DiffusionParams dp = diffusion_params(p);
  if (!dp.mutation_free()) {
    throw UnsupportedParameters(
        "SDE fixation estimates need v1 = v2 = 0 (boundaries must absorb)");
  }
  positive(p, "trials");
}

void run_sde_fixation(const Point& p, const RunContext& ctx,
                      const Emit& emit) {
  check_sde_fixation(p);
  const double a = p.real("alpha");
  const double x = p.real("p0");
  const SdeFixationSummary r =
      sde_fixation_mc(diffusion_params(p), x, p.real("dt"), p.real("t-max"),
                      p.integer("trials"), seed_of(ctx), workers(ctx));
  emit({{"absorbed_at_one", r.absorbed_at_one},
        {"absorbed_at_zero", r.absorbed_at_zero},
        {"fraction_at_one", r.fraction_at_one()},
        {"std_error", r.std_error()},
        {"p_fix_diffusion", pfix_diffusion(a, x)}},
       {{"censored", r.censored}});
}

// -------------------------------------------------------------- coalescent

void run_pmf(const Point& p, const RunContext&, const Emit& emit) {
  emit({{"pmf", geom_coalescence_pmf(p.real("N"), p.integer("k"))}}, {});
}

void run_geom_ai(const Point& p, const RunContext&, const Emit& emit) {
  const CoalescentGeomParams params{p.real("N"), p.real("nu")};
  const std::int64_t k = p.integer("k");
  const LogBase b = p.base();
  emit({{"active_" + unit(p), geom_ai(params, k, b).value},
        {"rearranged_active_" + unit(p),
         geom_ai_rearranged(params, k, b).value}},
       {});
}

void run_geom_ai_limit(const Point& p, const RunContext&, const Emit& emit) {
  const InfoValue v = geom_ai_limit(p.real("c"), p.real("d"));
  emit({{"active_" + unit(p), v.in(p.base()).value}}, {});
}

void run_kingman_rate(const Point& p, const RunContext&, const Emit& emit) {
  const double rate = kingman_rate(p.integer("lineages"));
  emit({{"rate", rate}, {"mean_time", 1.0 / rate}}, {});
}

void run_kingman_tail(const Point& p, const RunContext&, const Emit& emit) {
  const InfoValue v =
      kingman_tail_ai(p.integer("lineages"), p.real("mu"), p.real("t"));
  emit({{"active_" + unit(p), v.in(p.base()).value}}, {});
}

void run_kingman_tail_scaled(const Point& p, const RunContext&,
                             const Emit& emit) {
  const InfoValue v =
      kingman_tail_ai_scaled(p.integer("lineages"), p.real("c"), p.real("t"));
  emit({{"active_" + unit(p), v.in(p.base()).value}}, {});
}

void check_tmrca(const Point& p) {
  if (p.integer("N") < 2) throw InvalidParameter("N must be >= 2");
  positive(p, "trials");
  cap_or(p, 1);
}

void run_tmrca(const Point& p, const RunContext& ctx, const Emit& emit) {
  check_tmrca(p);
  const std::int64_t n = p.integer("N");
  const std::int64_t samples = positive(p, "trials");
  const std::int64_t cap = cap_or(p, default_tmrca_max_gens(n));
  const auto draws =
      sample_pairwise_tmrca_batch(n, samples, cap, seed_of(ctx), workers(ctx));
  std::int64_t censored = 0;
  std::int64_t first = 0;
  double sum = 0.0;
  for (const auto& d : draws) {
    if (!d) {
      ++censored;
      continue;
    }
    sum += static_cast<double>(*d);
    first += *d == 1;
  }
  const auto observed = static_cast<double>(samples - censored);
  Value mean, frac_first;
  if (observed > 0) {
    mean = sum / observed;
    frac_first = static_cast<double>(first) / observed;
  }
  emit({{"mean_generations", mean},
        {"expected_mean_generations", static_cast<double>(n)},
        {"fraction_at_k1", frac_first},
        {"effective_max_gens", cap}},
       {{"censored", censored}});
}

std::vector<Command> build() {
  std::vector<Command> list;
  const Flag iterative = optional(
      "iterative", Kind::toggle,
      "allow the fixed-point solver above the dense size cap", "false");

  list.push_back(
      {"simulate", "",
       "forward Wright-Fisher trajectories (one record per replicate, or per "
       "generation with --trace)",
       {pop_size(),
        required("i", Kind::integer, "initial A-allele count"),
        sel(), mu1(), mu2(), max_gens(),
        optional("replicates", Kind::integer, "number of trajectories", "1"),
        optional("no-stop", Kind::toggle,
                 "keep running after absorption", "false"),
        optional("trace", Kind::toggle,
                 "emit every generation instead of a summary", "false")},
       always, check_simulate, run_simulate});

  list.push_back({"actinfo", "single-draw",
                  "active information of drawing one A allele",
                  {pop_size(), count_i(), sel(), mu1(), mu2(), base()},
                  nullptr, nullptr, run_single_draw});
  list.push_back({"actinfo", "offspring",
                  "active information of j A offspring given i",
                  {pop_size(), count_i(),
                   required("j", Kind::integer, "next-generation A count"),
                   sel(), mu1(), mu2(), base()},
                  nullptr, nullptr, run_offspring});
  list.push_back({"actinfo", "one-step-fixation",
                  "active information of fixation in the next generation",
                  {pop_size(), count_i(), sel(), mu1(), mu2(), base()},
                  nullptr, nullptr, run_one_step});
  list.push_back({"actinfo", "from-probs",
                  "endogenous, exogenous and active information of an event",
                  {required("p-null", Kind::real, "event probability, null"),
                   required("p-alt", Kind::real,
                            "event probability, alternative"),
                   base()},
                  nullptr, nullptr, run_from_probs});

  list.push_back({"fixation", "exact",
                  "eventual fixation probability by a linear solve",
                  {pop_size(), count_i(), sel(), mu1(), mu2(), iterative},
                  nullptr, check_fixation_exact, run_fixation_exact});
  list.push_back({"fixation", "mc",
                  "eventual fixation probability by Monte Carlo",
                  {pop_size(), count_i(), sel(), mu1(), mu2(),
                   trials("100000"), max_gens()},
                  always, check_fixation_mc, run_fixation_mc});
  list.push_back(
      {"fixation", "ai",
       "active information of eventual fixation relative to i/N",
       {pop_size(), count_i(), sel(), mu1(), mu2(),
        optional("method", Kind::text, "exact or mc", "exact"),
        trials("100000"), max_gens(), iterative, base()},
       fixation_ai_stochastic, check_fixation_ai, run_fixation_ai});
  list.push_back(
      {"fixation", "vs-diffusion",
       "finite-N exact fixation at s = alpha/N, i = ceil(p0 N) against the "
       "diffusion limit",
       {pop_size(), alpha(), p0(), iterative},
       nullptr, [](const Point& p) { vs_diffusion_setup(p); },
       run_vs_diffusion});

  list.push_back({"diffusion", "drift",
                  "drift and variance coefficients at frequency p0",
                  {alpha(), v1(), v2(), p0("allele frequency p")},
                  nullptr, nullptr, run_drift});
  list.push_back({"diffusion", "pfix", "diffusion fixation probability",
                  {alpha(), p0()}, nullptr, nullptr, run_pfix});
  list.push_back({"diffusion", "pfix-ai",
                  "active information of fixation in the diffusion limit",
                  {alpha(), p0(), base()}, nullptr, nullptr, run_pfix_ai});
  list.push_back({"diffusion", "new-mutant",
                  "fixation probability of a single new mutant",
                  {pop_size(), sel(), base()}, nullptr, nullptr,
                  run_new_mutant});
  list.push_back({"diffusion", "regime",
                  "asymptotic regime and its approximations",
                  {pop_size(), sel(), base()}, nullptr, nullptr, run_regime});
  list.push_back(
      {"diffusion", "sde",
       "one Euler-Maruyama path (time in units of N generations)",
       {alpha(), v1(), v2(), p0(),
        optional("dt", Kind::real, "time step", "0.001"),
        optional("t-max", Kind::real, "time horizon", "1")},
       always, check_sde, run_sde});
  list.push_back(
      {"diffusion", "sde-fixation",
       "fraction of Euler-Maruyama paths absorbed at 1",
       {alpha(), v1(), v2(), p0(),
        optional("dt", Kind::real, "time step", "0.001"),
        optional("t-max", Kind::real, "time horizon per path", "50"),
        trials("10000")},
       always, check_sde_fixation, run_sde_fixation});

  list.push_back({"coalescent", "pmf",
                  "probability that two lineages coalesce k generations back",
                  {required("N", Kind::real, "population size (real, > 1)"),
                   required("k", Kind::integer, "generations back")},
                  nullptr, nullptr, run_pmf});
  list.push_back({"coalescent", "geom-ai",
                  "active information of coalescence at k under size nu",
                  {required("N", Kind::real, "baseline population size"),
                   required("nu", Kind::real, "alternative population size"),
                   required("k", Kind::integer, "generations back"), base()},
                  nullptr, nullptr, run_geom_ai});
  list.push_back({"coalescent", "geom-ai-limit",
                  "large-N limit (1 - 1/c) d - ln c",
                  {required("c", Kind::real, "size ratio nu / N"),
                   required("d", Kind::real, "rescaled time k / N"), base()},
                  nullptr, nullptr, run_geom_ai_limit});
  list.push_back({"coalescent", "kingman-rate",
                  "Kingman coalescence rate i(i-1)/2",
                  {required("lineages", Kind::integer, "lineage count i")},
                  nullptr, nullptr, run_kingman_rate});
  list.push_back({"coalescent", "kingman-tail-ai",
                  "active information of waiting longer than t",
                  {required("lineages", Kind::integer, "lineage count i"),
                   required("mu", Kind::real, "alternative mean waiting time"),
                   required("t", Kind::real, "time threshold"), base()},
                  nullptr, nullptr, run_kingman_tail});
  list.push_back({"coalescent", "kingman-tail-ai-scaled",
                  "tail active information with mean scaled by c",
                  {required("lineages", Kind::integer, "lineage count i"),
                   required("c", Kind::real, "population-scale factor"),
                   required("t", Kind::real, "time threshold"), base()},
                  nullptr, nullptr, run_kingman_tail_scaled});
  list.push_back({"coalescent", "tmrca",
                  "simulated pairwise coalescence times",
                  {required("N", Kind::integer, "population size"),
                   trials("100000"), max_gens()},
                  always, check_tmrca, run_tmrca});
  return list;
}

}  // namespace

const std::vector<Command>& commands() {
  static const std::vector<Command> list = build();
  return list;
}

}  // namespace wfai::cli

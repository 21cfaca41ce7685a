#include "wfai/diffusion.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "wfai/error.hpp"
#include "wfai/fixation.hpp"

namespace wfai {
namespace {

TEST(Drift, Examples) {
  for (double p : {0.0, 0.2, 0.7, 1.0}) EXPECT_EQ(drift({}, p), 0.0);
  EXPECT_DOUBLE_EQ(drift({2.0, 0.0, 0.0}, 0.5), 0.5);
  for (double alpha : {-3.0, 0.5, 10.0}) {
    EXPECT_EQ(drift({alpha, 0.0, 0.0}, 1.0), 0.0);
  }
  EXPECT_DOUBLE_EQ(drift({1.0, 0.5, 0.25}, 0.4), 0.24 - 0.2 + 0.15);
  EXPECT_THROW(drift({}, 1.5), InvalidParameter);
}

TEST(Variance, Examples) {
  EXPECT_EQ(variance(0.0), 0.0);
  EXPECT_EQ(variance(0.5), 0.25);
  EXPECT_EQ(variance(1.0), 0.0);
}

TEST(DiffusionParams, FromChain) {
  const DiffusionParams dp = DiffusionParams::from_chain({200, 0.01, 0.001, 0.002});
  EXPECT_DOUBLE_EQ(dp.alpha, 2.0);
  EXPECT_DOUBLE_EQ(dp.v1, 0.2);
  EXPECT_DOUBLE_EQ(dp.v2, 0.4);
  EXPECT_THROW((DiffusionParams{0.0, -1.0, 0.0}).validate(), InvalidParameter);
}

TEST(PfixDiffusion, Examples) {
  EXPECT_EQ(pfix_diffusion(0.0, 0.3), 0.3);
  EXPECT_NEAR(pfix_diffusion(1e-12, 0.3), 0.3, 1e-8);
  EXPECT_NEAR(pfix_diffusion(1.0, 0.5), 0.73105857863000488, 1e-15);
  EXPECT_EQ(pfix_diffusion(5.0, 0.0), 0.0);
  EXPECT_EQ(pfix_diffusion(-5.0, 1.0), 1.0);
}

TEST(PfixDiffusion, ContinuousAcrossZero) {
  for (double p0 = 0.01; p0 < 1.0; p0 += 0.01) {
    for (double alpha : {1e-9, -1e-9, 9.9e-9, 1.01e-8, -1.01e-8}) {
      ASSERT_NEAR(pfix_diffusion(alpha, p0), p0, 1e-8) << alpha << " " << p0;
    }
  }
}

TEST(PfixDiffusion, StableForLargeSelection) {
  EXPECT_NEAR(pfix_diffusion(500.0, 0.5), 1.0, 1e-15);
  const double tiny = pfix_diffusion(-500.0, 0.5);
  EXPECT_GT(tiny, 0.0);
  // (e^{500} - 1)/(e^{1000} - 1) ~ e^{-500}
  EXPECT_NEAR(std::log(tiny), -500.0, 1e-9);
  EXPECT_NEAR(log_pfix_diffusion(-5000.0, 0.5), -5000.0, 1e-9);
}

TEST(PfixDiffusion, MonotoneInAlphaAndP0) {
  for (double p0 = 0.05; p0 < 1.0; p0 += 0.05) {
    double prev = 0.0;
    for (double alpha = -20.0; alpha <= 20.0; alpha += 0.25) {
      const double v = pfix_diffusion(alpha, p0);
      // Strict until the value is within rounding of 1.
      ASSERT_TRUE(v > prev || 1.0 - v < 1e-14) << alpha << " " << p0;
      prev = v;
    }
  }
  for (double alpha : {-5.0, -0.3, 0.0, 0.7, 8.0}) {
    double prev = 0.0;
    for (double p0 = 0.02; p0 < 1.0; p0 += 0.02) {
      const double v = pfix_diffusion(alpha, p0);
      ASSERT_GT(v, prev);
      prev = v;
    }
  }
}

TEST(PfixAi, Examples) {
  EXPECT_EQ(pfix_ai(0.0, 0.42).value, 0.0);
  EXPECT_NEAR(pfix_ai(1.0, 0.5).value, 0.37988549304172248, 1e-14);
  EXPECT_LT(pfix_ai(-1.0, 0.5).value, 0.0);
  EXPECT_THROW(pfix_ai(1.0, 0.0), BoundaryEvent);
  EXPECT_THROW(pfix_ai(1.0, 1.0), BoundaryEvent);
}

TEST(PfixAi, SignMatchesAlpha) {
  for (double p0 = 0.05; p0 < 1.0; p0 += 0.05) {
    for (double alpha : {1e-6, 0.3, 4.0, 60.0}) {
      ASSERT_GT(pfix_ai(alpha, p0).value, 0.0);
      ASSERT_LT(pfix_ai(-alpha, p0).value, 0.0);
    }
  }
}

TEST(NewMutantPfix, Examples) {
  EXPECT_DOUBLE_EQ(new_mutant_pfix(100, 0.0), 0.01);
  EXPECT_NEAR(new_mutant_pfix(1000, 0.01), 0.019801326734058274, 1e-16);
  EXPECT_LT(std::abs(new_mutant_pfix(1000, 0.01) - 0.02) / 0.02, 0.05);
  const double del = new_mutant_pfix(1000, -0.01);
  EXPECT_NEAR(del, 4.1638065260083220e-11, 1e-24);
  const double approx = 0.02 * std::exp(-20.0);
  EXPECT_LT(del / approx, 1.1);
  EXPECT_GT(del / approx, 1.0 / 1.1);
}

TEST(NewMutantPfix, BeneficialApproximationWithinFivePercent) {
  for (std::int64_t n : {1000, 5000, 100000}) {
    for (double s : {0.001, 0.005, 0.01}) {
      if (static_cast<double>(n) * s < 10.0) continue;
      const double p = new_mutant_pfix(n, s);
      EXPECT_LT(std::abs(p - 2.0 * s) / (2.0 * s), 0.05) << n << " " << s;
    }
  }
}

TEST(NewMutantPfix, MatchesPfixAtOneOverN) {
  for (double s : {-0.02, -0.001, 0.003, 0.04}) {
    EXPECT_NEAR(new_mutant_pfix(500, s), pfix_diffusion(500 * s, 1.0 / 500),
                1e-12 * new_mutant_pfix(500, s));
  }
}

TEST(RegimeReport, Examples) {
  const RegimeReport neutral = regime_report(10000, 1e-6);
  EXPECT_EQ(neutral.regime, Regime::nearly_neutral);
  EXPECT_EQ(neutral.ai_approx->value, 0.0);
  EXPECT_DOUBLE_EQ(*neutral.p_fix_approx, 1e-4);

  const RegimeReport beneficial = regime_report(10000, 0.001);
  EXPECT_EQ(beneficial.regime, Regime::beneficial);
  EXPECT_NEAR(beneficial.ai_approx->value, 2.9957322735539910, 1e-14);
  EXPECT_DOUBLE_EQ(*beneficial.p_fix_approx, 0.002);

  const RegimeReport deleterious = regime_report(10000, -0.001);
  EXPECT_EQ(deleterious.regime, Regime::deleterious);
  EXPECT_NEAR(deleterious.ai_approx->value, -17.004267726446009, 1e-13);
  EXPECT_LT(deleterious.ai_approx->value, 0.0);

  const RegimeReport bits = regime_report(10000, 0.001, LogBase::bits);
  EXPECT_NEAR(bits.ai_approx->value, std::log2(20.0), 1e-14);
}

TEST(RegimeReport, UnclassifiedOmitsApproximations) {
  const RegimeReport mid = regime_report(100, 0.01);  // Ns = 1
  EXPECT_EQ(mid.regime, Regime::unclassified);
  EXPECT_FALSE(mid.p_fix_approx);
  EXPECT_FALSE(mid.ai_approx);
  EXPECT_GT(mid.p_fix_exact_formula, 0.0);
  EXPECT_EQ(regime_report(1000, 0.3).regime, Regime::unclassified);
}

TEST(RegimeReport, ThresholdsAreConfigurable) {
  RegimeThresholds loose;
  loose.min_strength = 0.5;
  EXPECT_EQ(regime_report(100, 0.01, LogBase::nats, loose).regime,
            Regime::beneficial);
}

TEST(SdeSimulate, BoundaryStartsAreConstant) {
  RandomStream rng(1);
  const SdePath zero = sde_simulate({1.0, 0.0, 0.0}, 0.0, 0.01, 1.0, rng);
  ASSERT_EQ(zero.values.size(), 1u);
  EXPECT_EQ(zero.values[0], 0.0);
  EXPECT_EQ(*zero.absorbed_step, 0);

  const SdePath one = sde_simulate({-1.0, 0.0, 0.0}, 1.0, 0.01, 1.0, rng);
  EXPECT_EQ(*one.absorbed_state, 1.0);

  // v2 = 0 keeps 0 a fixed point even though the boundary does not stop
  // the path when v1 > 0.
  const SdePath pinned = sde_simulate({1.0, 0.5, 0.0}, 0.0, 0.01, 1.0, rng);
  EXPECT_EQ(pinned.values.size(), 101u);
  for (double x : pinned.values) EXPECT_EQ(x, 0.0);
}

TEST(SdeSimulate, StaysInUnitIntervalAndAbsorbs) {
  for (std::uint64_t k = 0; k < 200; ++k) {
    RandomStream rng = RandomStream::derive(5, k);
    const SdePath path = sde_simulate({2.0, 0.0, 0.0}, 0.3, 0.01, 50.0, rng);
    for (double x : path.values) {
      ASSERT_GE(x, 0.0);
      ASSERT_LE(x, 1.0);
    }
    if (path.absorbed_step) {
      EXPECT_EQ(static_cast<std::size_t>(*path.absorbed_step) + 1,
                path.values.size());
      EXPECT_TRUE(*path.absorbed_state == 0.0 || *path.absorbed_state == 1.0);
    }
  }
}

TEST(SdeSimulate, MutationKeepsPathInsideUnitInterval) {
  RandomStream rng(6);
  const SdePath path = sde_simulate({0.5, 1.0, 1.0}, 0.5, 0.001, 5.0, rng);
  EXPECT_EQ(path.values.size(), 5001u);
  EXPECT_FALSE(path.absorbed_step);
  for (double x : path.values) {
    ASSERT_GE(x, 0.0);
    ASSERT_LE(x, 1.0);
  }
}

TEST(SdeFixationMc, MatchesClosedForm) {
  const SdeFixationSummary summary =
      sde_fixation_mc({1.0, 0.0, 0.0}, 0.5, 1e-3, 50.0, 10000, 8, 0);
  EXPECT_EQ(summary.censored, 0);
  EXPECT_EQ(summary.absorbed_at_one + summary.absorbed_at_zero, 10000);
  EXPECT_NEAR(summary.fraction_at_one(), pfix_diffusion(1.0, 0.5),
              3.0 * summary.std_error());
}

TEST(SdeFixationMc, IndependentOfThreadCount) {
  const DiffusionParams dp{-0.5, 0.0, 0.0};
  const auto a = sde_fixation_mc(dp, 0.4, 1e-2, 20.0, 700, 31, 1);
  const auto b = sde_fixation_mc(dp, 0.4, 1e-2, 20.0, 700, 31, 3);
  EXPECT_EQ(a.absorbed_at_one, b.absorbed_at_one);
  EXPECT_EQ(a.absorbed_at_zero, b.absorbed_at_zero);
  EXPECT_THROW(sde_fixation_mc({0.0, 0.1, 0.0}, 0.4, 1e-2, 1.0, 10, 1),
               UnsupportedParameters);
}

TEST(DiffusionLimit, ChainGapShrinksWithN) {
  for (double alpha : {0.5, 2.0}) {
    double prev = INFINITY;
    for (std::int64_t n : {20, 50, 100}) {
      const double s = alpha / static_cast<double>(n);
      const auto i = static_cast<std::int64_t>(n / 2);
      const double chain =
          exact_fixation_prob(WfParams::selection(n, s), i).p_fix;
      const double gap = std::abs(chain - pfix_diffusion(alpha, 0.5));
      EXPECT_LT(gap, prev) << alpha << " " << n;
      prev = gap;
    }
  }
}

}  // namespace
}  // namespace wfai

#include "wfai/wf_chain.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "wfai/error.hpp"

namespace wfai {
namespace {

// Brute-force pmf of the number of A offspring: enumerate all 2^N type
// sequences, each offspring independently A with probability theta.
std::vector<double> enumerate_offspring_pmf(int n, double th) {
  std::vector<double> pmf(static_cast<std::size_t>(n + 1), 0.0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    double prob = 1.0;
    int ones = 0;
    for (int b = 0; b < n; ++b) {
      const bool is_a = (mask >> b) & 1u;
      prob *= is_a ? th : 1.0 - th;
      ones += is_a;
    }
    pmf[static_cast<std::size_t>(ones)] += prob;
  }
  return pmf;
}

TEST(WfParams, Validation) {
  EXPECT_THROW(WfParams::neutral(1).validate(), InvalidParameter);
  EXPECT_THROW((WfParams{10, -1.0, 0, 0}).validate(), InvalidParameter);
  EXPECT_THROW((WfParams{10, 0.0, 1.5, 0}).validate(), InvalidParameter);
  EXPECT_THROW((WfParams{10, 0.0, 0, -0.1}).validate(), InvalidParameter);
  EXPECT_NO_THROW((WfParams{10, -0.99, 1.0, 0.0}).validate());
  EXPECT_THROW(theta(WfParams::neutral(10), 11), InvalidParameter);
}

TEST(Theta, Examples) {
  EXPECT_DOUBLE_EQ(theta(WfParams::neutral(100), 37), 0.37);
  EXPECT_NEAR(theta(WfParams::selection(100, 0.1), 50), 55.0 / 105.0, 1e-15);
  EXPECT_EQ(theta(WfParams::selection(100, 0.7), 0), 0.0);
}

TEST(Theta, NeutralIsExactlyIOverN) {
  // i/N is computed the same way on both sides; equality must be exact.
  for (std::int64_t n = 2; n <= 60; ++n) {
    for (std::int64_t i = 0; i <= n; ++i) {
      ASSERT_EQ(theta(WfParams::neutral(n), i),
                static_cast<double>(i) / static_cast<double>(n));
    }
  }
}

TEST(Theta, MonotoneInSelection) {
  for (std::int64_t i = 1; i < 20; ++i) {
    double prev = 0.0;
    for (double s = -0.9; s <= 2.0; s += 0.05) {
      const double th = theta(WfParams::selection(20, s), i);
      ASSERT_GE(th, prev);
      prev = th;
    }
  }
}

TEST(Theta, ComplementAddsToOneWithMutation) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 2000; ++t) {
    const WfParams params{2 + static_cast<std::int64_t>(gen() % 500),
                          -0.9 + 2.0 * u(gen), u(gen), u(gen)};
    const auto i = static_cast<std::int64_t>(gen() % (params.n_pop + 1));
    const double th = theta(params, i);
    ASSERT_GE(th, 0.0);
    ASSERT_LE(th, 1.0);
    ASSERT_NEAR(th + theta_complement(params, i), 1.0, 1e-15);
  }
}

TEST(SelectionSamplingProbs, Examples) {
  const auto neutral = selection_sampling_probs(WfParams::neutral(10), 4);
  EXPECT_DOUBLE_EQ(neutral.big_a, 0.4);
  EXPECT_DOUBLE_EQ(neutral.small_a, 0.6);
  const auto favored = selection_sampling_probs(WfParams::selection(10, 1.0), 4);
  EXPECT_NEAR(favored.big_a, 8.0 / 14.0, 1e-15);
  EXPECT_NEAR(favored.small_a, 6.0 / 14.0, 1e-15);
  const auto fixed = selection_sampling_probs(WfParams::selection(10, 0.5), 10);
  EXPECT_EQ(fixed.big_a, 1.0);
  EXPECT_EQ(fixed.small_a, 0.0);
}

TEST(SelectionSamplingProbs, SumToOneAndMatchTheta) {
  for (double s : {-0.5, -0.1, 0.0, 0.05, 0.3, 4.0}) {
    const WfParams params = WfParams::selection(37, s);
    for (std::int64_t i = 0; i <= 37; ++i) {
      const auto probs = selection_sampling_probs(params, i);
      EXPECT_NEAR(probs.big_a + probs.small_a, 1.0, 1e-15);
      EXPECT_DOUBLE_EQ(probs.big_a, theta(params, i));
    }
  }
  // Mutation fields are ignored.
  const auto with_mu =
      selection_sampling_probs(WfParams{10, 1.0, 0.3, 0.2}, 4);
  EXPECT_NEAR(with_mu.big_a, 8.0 / 14.0, 1e-15);
}

TEST(TransitionProb, Examples) {
  EXPECT_NEAR(transition_prob(WfParams::neutral(2), 1, 1), 0.5, 1e-15);
  EXPECT_EQ(transition_prob(WfParams{10, 0.2, 0.1, 0.0}, 0, 0), 1.0);
  EXPECT_EQ(transition_prob(WfParams::neutral(3), 3, 3), 1.0);
}

TEST(TransitionProb, MatchesBruteForceEnumeration) {
  const WfParams cases[] = {WfParams::neutral(5), WfParams::selection(6, 0.4),
                            WfParams{6, -0.3, 0.05, 0.1},
                            WfParams{4, 1.5, 0.5, 0.25}};
  for (const auto& params : cases) {
    for (std::int64_t i = 0; i <= params.n_pop; ++i) {
      const auto oracle = enumerate_offspring_pmf(
          static_cast<int>(params.n_pop), theta(params, i));
      for (std::int64_t j = 0; j <= params.n_pop; ++j) {
        EXPECT_NEAR(transition_prob(params, i, j),
                    oracle[static_cast<std::size_t>(j)], 1e-14);
      }
    }
  }
}

TEST(TransitionRow, Examples) {
  const ProbVector row = transition_row(WfParams::neutral(2), 1);
  ASSERT_EQ(row.size(), 3u);
  EXPECT_NEAR(row[0], 0.25, 1e-15);
  EXPECT_NEAR(row[1], 0.5, 1e-15);
  EXPECT_NEAR(row[2], 0.25, 1e-15);

  const ProbVector top = transition_row(WfParams{7, 0.3, 0.0, 0.2}, 7);
  for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(top[j], 0.0);
  EXPECT_EQ(top[7], 1.0);

  const ProbVector sel = transition_row(WfParams::selection(4, 0.2), 2);
  const auto w = sel.weights();
  EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-12);
}

TEST(TransitionRow, RowsSumToOneAndAgreeWithPointwise) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const WfParams params{2 + static_cast<std::int64_t>(gen() % 3000),
                          -0.5 + u(gen), 0.01 * u(gen), 0.01 * u(gen)};
    const auto i = static_cast<std::int64_t>(gen() % (params.n_pop + 1));
    const ProbVector row = transition_row(params, i);
    const auto w = row.weights();
    ASSERT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-12);
    const auto j = static_cast<std::int64_t>(gen() % (params.n_pop + 1));
    ASSERT_NEAR(row[static_cast<std::size_t>(j)], transition_prob(params, i, j),
                1e-13);
  }
}

TEST(TransitionRow, BoundariesAbsorbWithoutMutation) {
  for (std::int64_t n : {2, 10, 500}) {
    const WfParams params = WfParams::selection(n, 0.2);
    EXPECT_EQ(transition_prob(params, 0, 0), 1.0);
    EXPECT_EQ(transition_prob(params, n, n), 1.0);
  }
}

TEST(ProbVector, RejectsInvalidWeights) {
  EXPECT_THROW(ProbVector({0.5, 0.6}), InvalidParameter);
  EXPECT_THROW(ProbVector({1.2, -0.2}), InvalidParameter);
  EXPECT_NO_THROW(ProbVector({0.25, 0.75}));
}

TEST(MaxentInitial, Examples) {
  const ProbVector three = maxent_initial(3);
  EXPECT_EQ(three[0], 0.0);
  EXPECT_EQ(three[1], 0.5);
  EXPECT_EQ(three[2], 0.5);
  EXPECT_EQ(three[3], 0.0);

  const ProbVector two = maxent_initial(2);
  EXPECT_EQ(two[1], 1.0);

  const ProbVector eleven = maxent_initial(11);
  for (std::size_t k = 1; k <= 10; ++k) EXPECT_DOUBLE_EQ(eleven[k], 0.1);
  EXPECT_EQ(eleven[0], 0.0);
  EXPECT_EQ(eleven[11], 0.0);

  EXPECT_THROW(maxent_initial(1), InvalidParameter);
}

TEST(MaxentInitial, HasMaximalEntropy) {
  for (std::int64_t n : {2, 3, 10, 257}) {
    EXPECT_NEAR(maxent_initial(n).entropy(),
                std::log(static_cast<double>(n - 1)), 1e-12);
  }
}

TEST(Step, Boundaries) {
  RandomStream rng(1);
  for (int t = 0; t < 100; ++t) {
    EXPECT_EQ(step(WfParams{30, 0.3, 0.2, 0.0}, 0, rng), 0);
    EXPECT_EQ(step(WfParams{30, -0.3, 0.0, 0.2}, 30, rng), 30);
  }
}

TEST(Step, NeutralMeanWithinThreeSigma) {
  RandomStream rng(2024);
  const WfParams params = WfParams::neutral(50);
  constexpr int kDraws = 100000;
  double sum = 0.0;
  for (int t = 0; t < kDraws; ++t) {
    sum += static_cast<double>(step(params, 25, rng));
  }
  // Var of a single draw is N p q = 12.5.
  const double sigma = std::sqrt(12.5 / kDraws);
  EXPECT_NEAR(sum / kDraws, 25.0, 3.0 * sigma);
}

TEST(Simulate, BoundaryStartsStayPut) {
  RandomStream rng(3);
  const Trajectory zero =
      simulate(WfParams{40, 0.5, 0.1, 0.0}, 0, 100, rng, false);
  ASSERT_EQ(zero.counts.size(), 101u);
  for (auto c : zero.counts) EXPECT_EQ(c, 0);
  ASSERT_TRUE(zero.absorbed_at);
  EXPECT_EQ(zero.absorbed_at->generation, 0);

  const Trajectory full =
      simulate(WfParams{40, -0.5, 0.0, 0.1}, 40, 100, rng, false);
  for (auto c : full.counts) EXPECT_EQ(c, 40);

  const Trajectory stopped = simulate(WfParams::neutral(40), 0, 100, rng);
  EXPECT_EQ(stopped.counts.size(), 1u);
}

TEST(Simulate, TrajectoryInvariants) {
  const WfParams params = WfParams::selection(25, 0.05);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomStream rng = RandomStream::derive(7, seed);
    const Trajectory traj = simulate(params, 5, 400, rng, false);
    ASSERT_LE(traj.counts.size(), 401u);
    EXPECT_EQ(traj.counts.front(), 5);
    bool absorbed = false;
    AlleleCount absorbed_state = -1;
    for (auto c : traj.counts) {
      ASSERT_GE(c, 0);
      ASSERT_LE(c, 25);
      if (absorbed) ASSERT_EQ(c, absorbed_state);
      if (c == 0 || c == 25) {
        absorbed = true;
        absorbed_state = c;
      }
    }
    EXPECT_EQ(traj.seed, 7u);
    EXPECT_EQ(traj.stream_index, seed);
  }
}

TEST(Simulate, StopsAtAbsorptionAndRecordsIt) {
  RandomStream rng(8);
  const Trajectory traj = simulate(WfParams::neutral(10), 5, 10000, rng);
  ASSERT_TRUE(traj.absorbed_at);
  EXPECT_EQ(static_cast<std::size_t>(traj.absorbed_at->generation) + 1,
            traj.counts.size());
  EXPECT_EQ(traj.counts.back(), traj.absorbed_at->state);
}

TEST(Simulate, ReproducibleFromSeed) {
  const WfParams params{60, 0.02, 0.001, 0.002};
  RandomStream a = RandomStream::derive(42, 3);
  RandomStream b = RandomStream::derive(42, 3);
  EXPECT_EQ(simulate(params, 30, 500, a).counts,
            simulate(params, 30, 500, b).counts);
  RandomStream c = RandomStream::derive(42, 4);
  RandomStream d = RandomStream::derive(42, 3);
  EXPECT_NE(simulate(params, 30, 500, c).counts,
            simulate(params, 30, 500, d).counts);
}

TEST(Simulate, NeutralFixationFractionIsHalf) {
  const WfParams params = WfParams::neutral(20);
  constexpr int kReplicates = 10000;
  int fixed = 0;
  for (int r = 0; r < kReplicates; ++r) {
    RandomStream rng = RandomStream::derive(556, static_cast<std::uint64_t>(r));
    const Trajectory traj =
        simulate(params, 10, default_max_gens(params), rng);
    ASSERT_TRUE(traj.absorbed_at);
    fixed += traj.absorbed_at->state == 20;
  }
  const double sigma = std::sqrt(0.25 / kReplicates);
  EXPECT_NEAR(static_cast<double>(fixed) / kReplicates, 0.5, 3.0 * sigma);
}

}  // namespace
}  // namespace wfai

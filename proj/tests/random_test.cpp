#include "wfai/random.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "wfai/parallel.hpp"

namespace wfai {
namespace {

TEST(RandomStream, DerivedStreamsAreReproducibleAndDistinct) {
  RandomStream a = RandomStream::derive(1, 0);
  RandomStream b = RandomStream::derive(1, 0);
  RandomStream c = RandomStream::derive(1, 1);
  RandomStream d = RandomStream::derive(2, 0);
  bool differs_c = false;
  bool differs_d = false;
  for (int t = 0; t < 16; ++t) {
    const double x = a.uniform();
    ASSERT_EQ(x, b.uniform());
    differs_c |= x != c.uniform();
    differs_d |= x != d.uniform();
  }
  EXPECT_TRUE(differs_c);
  EXPECT_TRUE(differs_d);
  EXPECT_EQ(c.seed(), 1u);
  EXPECT_EQ(c.stream_index(), 1u);
}

TEST(RandomStream, UniformRange) {
  RandomStream rng(5);
  for (int t = 0; t < 100000; ++t) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(rng.below(7), 7u);
  }
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  for (unsigned threads : {1u, 2u, 5u}) {
    std::vector<int> hits(10007, 0);
    parallel_for(static_cast<std::int64_t>(hits.size()), threads,
                 [&](std::int64_t k) { ++hits[static_cast<std::size_t>(k)]; });
    for (int h : hits) ASSERT_EQ(h, 1);
  }
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(5000, 3,
                            [](std::int64_t k) {
                              if (k == 4321) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

}  // namespace
}  // namespace wfai

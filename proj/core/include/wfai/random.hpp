#pragma once

#include <cstdint>
#include <random>

namespace wfai {

// A seeded pseudo-random stream. Every stochastic routine takes one of these
// explicitly; there is no global generator.
//
// Parallel Monte Carlo code derives one stream per trial index from a master
// seed with `derive`, so results do not depend on how trials are scheduled
// across threads.
class RandomStream {
 public:
  using engine_type = std::mt19937_64;

  explicit RandomStream(std::uint64_t seed);

  // Independent substream `stream_index` of `master_seed`.
  static RandomStream derive(std::uint64_t master_seed,
                             std::uint64_t stream_index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Standard normal variate.
  double normal();
  // Uniform integer on [0, n).
  std::uint64_t below(std::uint64_t n);

  engine_type& engine() { return engine_; }

 private:
  RandomStream(std::seed_seq& seq, std::uint64_t seed, std::uint64_t index);

  engine_type engine_;
  std::normal_distribution<double> normal_;
  std::uint64_t seed_;
  std::uint64_t stream_index_ = 0;
};

}  // namespace wfai

#include "wfai/random.hpp"

namespace wfai {

namespace {

std::seed_seq make_seq(std::uint64_t seed, std::uint64_t index,
                       std::uint32_t tag) {
  return std::seed_seq{static_cast<std::uint32_t>(seed),
                       static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(index),
                       static_cast<std::uint32_t>(index >> 32), tag};
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed) {
  auto seq = make_seq(seed, 0, 0x5eed0000u);
  engine_.seed(seq);
}

RandomStream::RandomStream(std::seed_seq& seq, std::uint64_t seed,
                           std::uint64_t index)
    : engine_(seq), seed_(seed), stream_index_(index) {}

RandomStream RandomStream::derive(std::uint64_t master_seed,
                                  std::uint64_t stream_index) {
  auto seq = make_seq(master_seed, stream_index, 0x5eed0001u);
  return RandomStream(seq, master_seed, stream_index);
}

double RandomStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() { return normal_(engine_); }

std::uint64_t RandomStream::below(std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
}

}  // namespace wfai

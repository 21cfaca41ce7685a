#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wfai {

// Number of workers to use when the caller asks for 0 ("auto").
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls body(index) for every index in [0, count), distributing chunks of
// indices over `threads` workers. Bodies must only write to per-index
// storage; callers reduce afterwards in index order so results do not depend
// on the worker count. The first exception thrown by a body is rethrown.
template <class Body>
void parallel_for(std::int64_t count, unsigned threads, Body&& body) {
  threads = resolve_threads(threads);
  if (threads <= 1 || count < 2) {
    for (std::int64_t idx = 0; idx < count; ++idx) body(idx);
    return;
  }
  constexpr std::int64_t kChunk = 256;
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (;;) {
        const std::int64_t begin = next.fetch_add(kChunk);
        if (begin >= count) return;
        const std::int64_t end = std::min(count, begin + kChunk);
        for (std::int64_t idx = begin; idx < end; ++idx) body(idx);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };
  const auto workers = static_cast<unsigned>(
      std::min<std::int64_t>(threads, (count + kChunk - 1) / kChunk));
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace wfai

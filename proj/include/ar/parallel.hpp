#pragma once

#include <cstddef>
#include <functional>

namespace ar {

// Worker cap: AR_THREADS if set to a positive integer, else the hardware
// concurrency (at least 1).
std::size_t worker_count();

// Calls body(lo, hi) on disjoint chunks covering [begin, end). Chunks run on
// up to worker_count() threads; the call returns when all have finished.
// The first exception thrown by a chunk is rethrown.
void parallel_chunks(std::size_t begin, std::size_t end,
                     const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace ar

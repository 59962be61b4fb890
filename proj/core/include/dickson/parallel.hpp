#pragma once

#include <cstdint>
#include <functional>

namespace dickson {

/// Worker count: the DICKSON_THREADS environment variable when set to a
/// positive integer, otherwise the hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [begin, end) across worker_count() threads.
/// Iterations must be independent; the first exception thrown by any
/// iteration is rethrown on the calling thread after all workers join.
void parallel_for(uint64_t begin, uint64_t end,
                  const std::function<void(uint64_t)>& body);

}  // namespace dickson

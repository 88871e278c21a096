#pragma once

#include <cstddef>
#include <functional>

namespace urbound {

/// Worker count: hardware concurrency capped by the URBOUND_THREADS
/// environment variable (values < 1 are ignored).
unsigned worker_count();

/// Runs body(i) for i in [0, n). Indices are handed out one at a time to at most
/// worker_count() threads; the first exception thrown is rethrown after all
/// workers join. Callers write results into per-index slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace urbound

#pragma once

#include <cstddef>
#include <functional>

namespace homtwist {

/// Global worker cap for parallelFor; 0 means hardware concurrency.
void setParallelJobs(unsigned jobs);
unsigned parallelJobs();

/// Runs fn(i) for i in [0, n) on worker threads. Results must be written to
/// pre-sized slots indexed by i so output order is deterministic. The first
/// exception thrown by a task is rethrown after all workers join.
void parallelFor(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace homtwist

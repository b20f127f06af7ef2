#pragma once

#include <cstddef>
#include <functional>

namespace tubegeo {

// Worker cap: TUBEGEO_THREADS if set, else hardware concurrency.
int worker_count();

// Runs fn(i) for i in [0, n) across workers with static chunking. Callers
// write into preallocated per-index slots, so results are independent of the
// partitioning and of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace tubegeo

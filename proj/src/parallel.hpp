#pragma once

#include <cstddef>
#include <functional>

namespace marc::detail {

// Worker count: MARC_CAP_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

// Calls fn(i) for i in [0, n). Work is split into contiguous blocks, so callers
// that write results by index get the same output for any thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace marc::detail

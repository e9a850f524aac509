// Worker cap and a deterministic static-partition parallel loop. Results must
// not depend on scheduling: callers either write disjoint slots per index or
// reduce per-thread partials in thread order.

#pragma once

#include <cstddef>
#include <functional>

namespace clw {

// Global worker cap (default 1). The CLI --threads flag sets this.
int thread_count();
void set_thread_count(int count);

// Runs fn(index) for index in [0, count) on up to thread_count() workers.
// Index i is handled by worker i % workers (static partition).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace clw

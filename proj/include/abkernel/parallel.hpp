#pragma once

#include <cstddef>
#include <functional>

namespace abk {

// Worker count: explicit setting, else ABKERNEL_THREADS, else hardware concurrency.
int thread_count();
void set_thread_count(int n);

// Runs f(i) for i in [0, n) on the worker pool; blocks until done. Exceptions
// from workers are rethrown on the caller (first one wins).
void parallel_for(size_t n, const std::function<void(size_t)>& f);

} // namespace abk

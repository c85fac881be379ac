#pragma once

#include <cstddef>
#include <functional>

namespace fpreg {

// Worker count used by the parallel kernels. Defaults to $FPREG_THREADS, else 1.
int thread_count() noexcept;
void set_thread_count(int k) noexcept;

// Calls body(i) for i in [0, n). Each index is handled by exactly one worker;
// callers write results into per-index slots and reduce them in index order,
// which keeps every result independent of the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fpreg

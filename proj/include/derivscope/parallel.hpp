#pragma once

#include <cstddef>
#include <functional>

namespace derivscope {

/// Worker-thread cap: the DERIVSCOPE_THREADS environment variable when set
/// (0 means sequential), hardware concurrency otherwise.
unsigned thread_cap();

/// Runs fn(0), ..., fn(count-1), possibly concurrently. Callers keep results
/// deterministic by writing to disjoint, preallocated slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace derivscope

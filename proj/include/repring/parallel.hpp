#pragma once

#include <cstddef>
#include <functional>

namespace repring {

// REPRING_THREADS if set and positive, otherwise the hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, n). Each index is visited exactly once; callers
// write into pre-sized slots so the result does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace repring

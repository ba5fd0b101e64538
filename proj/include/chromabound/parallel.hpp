#pragma once

#include <cstddef>
#include <functional>

namespace chromabound {

/// Worker cap taken from CHROMABOUND_THREADS (a positive integer), falling
/// back to the hardware concurrency. Throws std::invalid_argument when the
/// variable is set to anything other than a positive integer.
unsigned thread_cap();

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
/// visited exactly once; callers write results into preallocated slots so the
/// outcome does not depend on scheduling.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace chromabound

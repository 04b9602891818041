#pragma once

#include <cstddef>
#include <functional>

namespace fourierlab {

/// Worker count: hardware concurrency capped by FOURIERLAB_THREADS (integer >= 1).
/// An unset variable means no cap; a malformed one is ignored.
unsigned thread_budget();

/// Runs task(i) for i in [0, count). Tasks must write only to their own slot;
/// callers reduce the slots in index order so results do not depend on the
/// number of threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace fourierlab

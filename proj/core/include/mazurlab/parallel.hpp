// Thread-count resolution and a deterministic parallel index loop.
// Workers write only to their own preassigned indices, so results never
// depend on scheduling.
#pragma once

#include <cstddef>
#include <functional>

namespace mazurlab {

// requested > 0 wins; otherwise the MAZURLAB_THREADS environment variable
// (when set to a positive integer), otherwise hardware concurrency.
// Always at least 1.
int resolve_thread_count(int requested);

// Runs fn(i) for i in [0, count) across `threads` workers on striped
// indices.  threads <= 1 runs inline.  Exceptions escape to the caller
// (the first one observed).
void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn);

}  // namespace mazurlab

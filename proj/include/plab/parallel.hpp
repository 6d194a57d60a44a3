#pragma once

#include <cstddef>
#include <functional>

namespace plab {

/// Worker count: hardware concurrency, capped by PREIMAGE_LAB_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index is
/// visited exactly once; callers write results into per-index slots so the
/// merged output does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace plab

#pragma once

#include <cstddef>
#include <functional>

namespace roispot {

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Each index is handled by
/// exactly one call, so results written per index do not depend on the thread count.
/// The first exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace roispot

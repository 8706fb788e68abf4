#pragma once

#include <cstddef>
#include <functional>

namespace marstrand {

/// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware).
/// Tasks must be independent; callers combine per-index results in index
/// order afterwards, which keeps every reduction bit-stable across thread
/// counts. First exception thrown by a task is rethrown on the caller.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace marstrand

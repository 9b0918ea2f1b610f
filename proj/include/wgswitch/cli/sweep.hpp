#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace wgswitch::cli {

/// Worker count: WGSWITCH_THREADS if set to a positive integer, else the
/// machine's hardware concurrency (at least 1).
std::size_t default_thread_count();

/// Evaluates task(i) for i in [0, n) on up to `threads` workers. Each task
/// writes only results[i]; ordering of results never depends on scheduling.
/// Exceptions inside a task are the task's responsibility.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& task);

}  // namespace wgswitch::cli

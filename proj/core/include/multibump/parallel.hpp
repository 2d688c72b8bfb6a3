#pragma once

#include <functional>

namespace multibump {

/// Worker count: MULTIBUMP_THREADS caps the pool; defaults to the hardware
/// concurrency.
int worker_count();

/// Runs body(i) for i in [0, n) over the worker pool in contiguous chunks.
/// Callers must write to disjoint locations; chunk order is deterministic.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace multibump

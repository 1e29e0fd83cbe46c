#pragma once

#include <functional>

namespace qg {

// Worker cap: QGROUPOID_WORKERS if set and positive, else hardware concurrency.
int worker_count();

// Runs body(i) for i in [0, count) across worker_count() threads. Each index
// is handled exactly once; results must be written to disjoint slots.
void parallel_for(int count, const std::function<void(int)> &body);

} // namespace qg

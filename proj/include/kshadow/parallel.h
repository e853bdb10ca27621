#pragma once

#include <functional>

namespace kshadow {

/// Worker count: KSHADOW_THREADS when set (clamped to >= 1), otherwise the
/// hardware concurrency.
int thread_budget();

/// Runs fn(0..n-1), splitting across the thread budget when it exceeds one.
/// Calls must write to disjoint slots; iteration order is unspecified.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace kshadow

#pragma once

#include <cstddef>
#include <functional>

namespace cellgeom {

/// Worker count: hardware concurrency, capped by CELLGEOM_THREADS when set.
/// A non-zero override from set_worker_override wins over both.
unsigned worker_count();

/// Forces an exact worker count (0 restores the default rule).
void set_worker_override(unsigned workers);

/// Calls body(i) for i in [0, n) on up to worker_count() threads. Work is
/// claimed dynamically; the first exception thrown is rethrown after all
/// workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cellgeom

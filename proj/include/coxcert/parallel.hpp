#pragma once

#include <cstddef>
#include <functional>

namespace coxcert {

/// Worker count: hardware concurrency, capped by COXCERT_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. Each index is
/// visited exactly once; the first exception thrown is rethrown after join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace coxcert

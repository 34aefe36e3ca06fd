#pragma once

#include <cstddef>
#include <functional>

namespace hirota {

// Worker count: explicit request wins, then the HIROTA_THREADS environment
// variable, then 1.
int resolve_threads(int requested);

// Runs fn(i) for i in [0, n) on up to `threads` workers with a static block
// partition. Results must go to disjoint slots; the partition is
// deterministic, so output never depends on the worker count.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace hirota

#pragma once

#include <cstddef>
#include <functional>

namespace entatlas {

// ENTATLAS_THREADS if set to a positive integer, else the hardware count.
unsigned thread_count();

// Calls fn(i) for i in [0, n) on up to thread_count() threads. Indices are
// handed out in contiguous chunks; the first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace entatlas

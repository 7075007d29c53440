#pragma once

#include <chrono>
#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace adia {

/// Number of threads the parallel kernels will use.
inline int thread_count() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Wall-clock seconds for benchmarking.
inline double wall_time() {
#if defined(_OPENMP)
  return omp_get_wtime();
#else
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
#endif
}

// Parallel kernels below a few hundred items are not worth the fork/join
// overhead; loops use this as the `if` clause threshold.
inline constexpr std::size_t kParallelThreshold = 256;

}  // namespace adia

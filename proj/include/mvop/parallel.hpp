#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>

#ifdef MVOP_HAVE_OPENMP
#include <omp.h>
#endif

namespace mvop {

/// Runs body(i) for i in [0, count). With OpenMP the iterations are spread
/// over threads with dynamic scheduling (per-point cost varies with |x|).
/// The first exception thrown by any iteration is rethrown on the caller.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
#ifdef MVOP_HAVE_OPENMP
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) {
        failure = std::current_exception();
      }
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
#else
  for (std::size_t i = 0; i < count; ++i) {
    body(i);
  }
#endif
}

inline int worker_count() {
#ifdef MVOP_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace mvop

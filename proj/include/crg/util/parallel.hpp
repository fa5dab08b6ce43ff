#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace crg {

// OpenMP loop over [0, n). The first exception thrown by any iteration is
// rethrown on the calling thread after the loop; later ones are dropped.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  std::exception_ptr first;
  std::mutex mu;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(mu);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace crg

#ifndef MIFTAH_PARALLEL_HPP_
#define MIFTAH_PARALLEL_HPP_

#include <cstddef>
#include <exception>
#include <vector>

namespace miftah {

enum class Exec { kSerial, kParallel };

// Runs fn(i) for i in [0, count). In parallel mode the iterations are
// distributed over OpenMP threads (OMP_NUM_THREADS controls the pool);
// fn must only write to state owned by index i. The first thrown
// exception, by index, is rethrown after the loop so failures are
// deterministic too.
template <typename Fn>
void for_each_index(std::size_t count, Exec exec, Fn&& fn) {
  if (count == 0) return;
  if (exec == Exec::kSerial) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
#else
  for (std::size_t i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
#endif
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace miftah

#endif  // MIFTAH_PARALLEL_HPP_

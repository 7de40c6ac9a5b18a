// Serial / OpenMP execution of independent index ranges.
#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

namespace metacs {

enum class Exec { serial, parallel };

// Calls f(i) for i in [0, n); results land in index order regardless of policy.
template <class T, class F>
std::vector<T> map_indices(Exec exec, std::size_t n, F&& f) {
  std::vector<T> out(n);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace metacs

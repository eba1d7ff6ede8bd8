#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ars {

// Runs fn(0..count-1) over `jobs` threads in contiguous slices. Exceptions
// are rethrown on the caller thread, lowest index first, so the outcome is
// independent of the degree of parallelism.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  std::vector<std::pair<std::size_t, std::exception_ptr>> errors(
      workers, {0, nullptr});
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      const std::size_t lo = count * w / workers;
      const std::size_t hi = count * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) {
        try {
          fn(i);
        } catch (...) {
          errors[w] = {i, std::current_exception()};
          return;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  std::exception_ptr first;
  std::size_t first_index = 0;
  for (const auto& [index, err] : errors) {
    if (err && (!first || index < first_index)) {
      first = err;
      first_index = index;
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace ars

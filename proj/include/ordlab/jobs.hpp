#ifndef ORDLAB_JOBS_HPP_
#define ORDLAB_JOBS_HPP_

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace ordlab {

// Runs fn(i) for i in [0, n) over `jobs` workers with a strided index split;
// results land in index order, so the output is identical for any job count.
template <typename T>
std::vector<T> parallel_map(size_t n, int jobs, const std::function<T(size_t)>& fn) {
  std::vector<T> out(n);
  if (jobs <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) {
      out[i] = fn(i);
    }
    return out;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t]() {
      try {
        for (size_t i = static_cast<size_t>(t); i < n; i += static_cast<size_t>(jobs)) {
          out[i] = fn(i);
        }
      } catch (...) {
        errors[static_cast<size_t>(t)] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) {
    w.join();
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return out;
}

}  // namespace ordlab

#endif  // ORDLAB_JOBS_HPP_

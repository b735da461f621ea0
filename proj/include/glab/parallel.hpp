#ifndef GLAB_PARALLEL_HPP
#define GLAB_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace glab {

/// Applies fn to every item on up to `jobs` threads. out[i] = fn(items[i])
/// regardless of scheduling; the first exception thrown is rethrown.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, std::size_t jobs = 1)
    -> std::vector<std::invoke_result_t<Fn&, const T&>> {
  using R = std::invoke_result_t<Fn&, const T&>;
  std::vector<R> out(items.size());
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(items.size(), 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
      try {
        out[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard guard(error_lock);
        if (!error) error = std::current_exception();
        next = items.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace glab

#endif  // GLAB_PARALLEL_HPP

#include "clw/parallel.hpp"

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace clw {

namespace {
std::atomic<int> g_thread_count{1};
}

int thread_count() { return g_thread_count.load(); }

void set_thread_count(int count) { g_thread_count.store(count < 1 ? 1 : count); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const int workers =
      static_cast<int>(std::min<std::size_t>(count, thread_count()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (std::size_t i = t; i < count; i += workers) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace clw

#include "marstrand/parallel.hpp"

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace marstrand {

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    std::size_t t = threads == 0 ? std::thread::hardware_concurrency() : threads;
    if (t == 0) t = 1;
    t = std::min(t, n);
    if (t == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    workers.reserve(t);
    for (std::size_t w = 0; w < t; ++w) {
        const std::size_t lo = w * n / t;
        const std::size_t hi = (w + 1) * n / t;
        workers.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& worker : workers) worker.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace marstrand

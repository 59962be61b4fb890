#include "dickson/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dickson {

unsigned worker_count()
{
    if (const char* env = std::getenv("DICKSON_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_for(uint64_t begin, uint64_t end,
                  const std::function<void(uint64_t)>& body)
{
    if (begin >= end) return;
    const uint64_t total = end - begin;
    const unsigned workers =
        static_cast<unsigned>(std::min<uint64_t>(worker_count(), total));
    if (workers <= 1) {
        for (uint64_t i = begin; i < end; ++i) body(i);
        return;
    }

    std::atomic<uint64_t> next{begin};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            const uint64_t i = next.fetch_add(1);
            if (i >= end) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace dickson

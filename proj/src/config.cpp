#include "gcensus/config.hpp"

#include <atomic>
#include <thread>

#include "gcensus/errors.hpp"

namespace gcensus {

namespace {

std::atomic<int> g_max_order{20000};
std::atomic<int> g_threads{0};  // 0: pick at first use

}  // namespace

int max_order() { return g_max_order.load(std::memory_order_relaxed); }

void set_max_order(int n) {
    if (n < 0) throw InvalidParameter("max_order must be nonnegative");
    g_max_order.store(n, std::memory_order_relaxed);
}

int thread_count() {
    int t = g_threads.load(std::memory_order_relaxed);
    if (t > 0) return t;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_count(int n) {
    if (n < 0) throw InvalidParameter("thread count must be nonnegative");
    g_threads.store(n, std::memory_order_relaxed);
}

}  // namespace gcensus

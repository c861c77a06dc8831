#include "z2vqe/threading.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

namespace z2vqe {

namespace {
std::atomic<int> g_thread_cap{0};
}

int thread_cap() {
    int cap = g_thread_cap.load();
    if (cap > 0) return cap;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_cap(int cap) { g_thread_cap.store(cap); }

void parallel_for(int n, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    int workers = std::min(n, thread_cap());
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr error;
    std::mutex error_mu;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= n) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace z2vqe

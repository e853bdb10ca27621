#include "kshadow/parallel.h"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace kshadow {

int thread_budget() {
    if (const char* env = std::getenv("KSHADOW_THREADS")) {
        int v = std::atoi(env);
        return v < 1 ? 1 : v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw < 1 ? 1 : static_cast<int>(hw);
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = std::min(n, thread_budget());
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (std::thread& t : pool) t.join();
}

}  // namespace kshadow

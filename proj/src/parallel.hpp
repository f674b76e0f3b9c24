#pragma once

// Data-parallel helper capped by CHEMOFLOW_THREADS. Work items write to
// disjoint slots, so results do not depend on the thread count.

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace chemoflow {

inline int thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    if (const char* env = std::getenv("CHEMOFLOW_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < static_cast<long>(hw))
            hw = static_cast<unsigned>(v);
    }
    return static_cast<int>(hw);
}

inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int threads = thread_cap();
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers)
                fn(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

}  // namespace chemoflow

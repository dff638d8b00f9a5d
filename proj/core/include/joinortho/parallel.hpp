#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace joinortho {

/* Runs fn(i) for i in [0, count) on up to `jobs` threads (0 meaning all
 * hardware threads), handing out indices dynamically.  fn must not throw.
 * With jobs == 1 the loop runs on the calling thread. */
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (count == 0) return;
    unsigned want = jobs > 0 ? static_cast<unsigned>(jobs)
                             : std::max(1u, std::thread::hardware_concurrency());
    if (want > count) want = static_cast<unsigned>(count);
    if (want <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(want);
    for (unsigned t = 0; t < want; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

} // namespace joinortho

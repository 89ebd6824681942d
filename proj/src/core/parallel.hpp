#pragma once

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <vector>

namespace hyptor {

// Run fn(0..n-1), possibly concurrently.  Results must be written to
// disjoint slots; exceptions propagate to the caller.
template <class F>
void parallel_for(int n, F&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    int workers = std::min(n, hw ? static_cast<int>(hw) : 1);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::future<void>> futs;
    futs.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&] {
            for (int i = next++; i < n; i = next++) fn(i);
        }));
    for (auto& f : futs) f.get();
}

} // namespace hyptor

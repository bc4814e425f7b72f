#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace grcat {

// Worker count: GRCAT_THREADS when set to a positive integer, otherwise the
// hardware concurrency.
inline unsigned worker_count() {
    if (const char* env = std::getenv("GRCAT_THREADS")) {
        try {
            auto n = std::stol(env);
            if (n >= 1)
                return static_cast<unsigned>(n);
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Smallest index in [0, count) where fails(index) is true. Chunks are handed
// out in increasing order and a chunk is skipped only when it starts past the
// best failure found so far, so the answer is schedule independent.
template <class Pred>
std::optional<std::uint64_t> first_failure(std::uint64_t count, Pred fails) {
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    const unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(1, count / 4096)));
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < count; ++i)
            if (fails(i))
                return i;
        return std::nullopt;
    }

    const std::uint64_t chunk = std::max<std::uint64_t>(1024, count / (workers * 16));
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{none};
    auto work = [&] {
        for (;;) {
            const auto start = next.fetch_add(chunk);
            if (start >= count || start >= best.load())
                return;
            const auto end = std::min(count, start + chunk);
            for (auto i = start; i < end; ++i) {
                if (fails(i)) {
                    auto cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    pool.clear();
    if (best.load() == none)
        return std::nullopt;
    return best.load();
}

}  // namespace grcat

namespace grcat {

// Every index in [0, count) where keep(index) is true, in increasing order.
template <class Pred>
std::vector<std::uint64_t> parallel_collect(std::uint64_t count, Pred keep) {
    const unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(1, count / 1024)));
    std::vector<std::vector<std::uint64_t>> found(workers);
    auto work = [&](unsigned w) {
        for (std::uint64_t i = w; i < count; i += workers)
            if (keep(i))
                found[w].push_back(i);
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(work, w);
        work(0);
    }
    std::vector<std::uint64_t> out;
    for (auto& f : found)
        out.insert(out.end(), f.begin(), f.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace grcat

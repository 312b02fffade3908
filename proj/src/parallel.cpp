#include "coeffgap/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace coeffgap {

int worker_count() {
    if (const char* env = std::getenv("COEFFGAP_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

BestPoint parallel_best(std::int64_t n,
                        const std::function<BestPoint(std::int64_t, std::int64_t)>& body,
                        int threads) {
    if (n <= 0) return {};
    if (threads <= 0) threads = worker_count();
    const int chunks = static_cast<int>(std::min<std::int64_t>(threads, n));
    if (chunks <= 1) return body(0, n);

    std::vector<BestPoint> partial(chunks);
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    const std::int64_t step = (n + chunks - 1) / chunks;
    for (int c = 0; c < chunks; ++c) {
        const std::int64_t begin = c * step;
        const std::int64_t end = std::min<std::int64_t>(begin + step, n);
        pool.emplace_back([&, c, begin, end] { partial[c] = body(begin, end); });
    }
    for (auto& t : pool) t.join();

    BestPoint best;
    for (const auto& bp : partial) best = merge_best(best, bp);
    return best;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body,
                  int threads) {
    if (n <= 0) return;
    if (threads <= 0) threads = worker_count();
    const int chunks = static_cast<int>(std::min<std::int64_t>(threads, n));
    if (chunks <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    const std::int64_t step = (n + chunks - 1) / chunks;
    for (int c = 0; c < chunks; ++c) {
        const std::int64_t begin = c * step;
        const std::int64_t end = std::min<std::int64_t>(begin + step, n);
        pool.emplace_back([&, begin, end] { body(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace coeffgap

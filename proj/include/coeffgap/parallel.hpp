#pragma once

#include <cstdint>
#include <functional>

namespace coeffgap {

/// Best (value, flat index) over a grid slice. Merging prefers the larger
/// value and, on exact ties, the smaller index, so results are independent
/// of how the index range was sharded.
struct BestPoint {
    double value = -1e308;
    std::int64_t index = -1;
};

inline BestPoint merge_best(BestPoint a, BestPoint b) {
    if (b.value > a.value) return b;
    if (b.value == a.value && b.index >= 0 && (a.index < 0 || b.index < a.index)) return b;
    return a;
}

/// Number of worker threads: COEFFGAP_THREADS if set, else hardware count.
int worker_count();

/// Splits [0, n) into contiguous chunks, evaluates `body(begin, end)` on each
/// (possibly concurrently), and merges the partial results deterministically.
BestPoint parallel_best(std::int64_t n,
                        const std::function<BestPoint(std::int64_t, std::int64_t)>& body,
                        int threads = 0);

/// Runs `body(begin, end)` over contiguous chunks of [0, n); the caller owns
/// any per-index output slots, so the result is schedule-independent.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body,
                  int threads = 0);

}  // namespace coeffgap

#pragma once

#include <atomic>
#include <cstdlib>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace triplekit {

/// Number of worker threads for exhaustive basis sweeps: the value of
/// TRIPLEKIT_THREADS when set (minimum 1), otherwise the hardware count.
inline std::size_t sweep_threads() {
    if (const char* env = std::getenv("TRIPLEKIT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Mixed-radix index space for tuples (i_0, ..., i_{k-1}) with i_j < dims[j];
/// linear order is lexicographic in the tuple.
struct TupleSpace {
    std::vector<std::size_t> dims;

    std::size_t total() const {
        std::size_t t = 1;
        for (auto d : dims) t *= d;
        return t;
    }

    std::vector<std::size_t> decode(std::size_t index) const {
        std::vector<std::size_t> tuple(dims.size(), 0);
        for (std::size_t j = dims.size(); j-- > 0;) {
            tuple[j] = index % dims[j];
            index /= dims[j];
        }
        return tuple;
    }
};

/// Scan [0, n) for the smallest index where `f` reports a failure.
/// Deterministic under parallelism: contiguous blocks per thread, final
/// reduction takes the minimum index; threads past the current best bail out.
template <class T, class F>
std::optional<std::pair<std::size_t, T>> sweep_first_failure(std::size_t n, F&& f) {
    std::size_t nthreads = sweep_threads();
    if (nthreads <= 1 || n < 256) {
        for (std::size_t i = 0; i < n; ++i)
            if (auto r = f(i)) return std::make_pair(i, std::move(*r));
        return std::nullopt;
    }

    std::atomic<std::size_t> best{n};
    std::vector<std::optional<std::pair<std::size_t, T>>> found(nthreads);
    std::vector<std::thread> workers;
    std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        workers.emplace_back([&, t] {
            std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) {
                if (best.load(std::memory_order_relaxed) < i) return;
                if (auto r = f(i)) {
                    found[t] = std::make_pair(i, std::move(*r));
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {}
                    return;
                }
            }
        });
    }
    for (auto& w : workers) w.join();

    std::optional<std::pair<std::size_t, T>> result;
    for (auto& r : found)
        if (r && (!result || r->first < result->first)) result = std::move(r);
    return result;
}

/// Collect every failing index in [0, n), in increasing order.
template <class T, class F>
std::vector<std::pair<std::size_t, T>> sweep_all_failures(std::size_t n, F&& f) {
    std::size_t nthreads = sweep_threads();
    std::vector<std::pair<std::size_t, T>> out;
    if (nthreads <= 1 || n < 256) {
        for (std::size_t i = 0; i < n; ++i)
            if (auto r = f(i)) out.emplace_back(i, std::move(*r));
        return out;
    }

    std::vector<std::vector<std::pair<std::size_t, T>>> parts(nthreads);
    std::vector<std::thread> workers;
    std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        workers.emplace_back([&, t] {
            std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
            for (std::size_t i = lo; i < hi; ++i)
                if (auto r = f(i)) parts[t].emplace_back(i, std::move(*r));
        });
    }
    for (auto& w : workers) w.join();
    for (auto& p : parts)
        for (auto& e : p) out.push_back(std::move(e));
    return out;
}

} // namespace triplekit

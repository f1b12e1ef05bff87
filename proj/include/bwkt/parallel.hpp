#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace bwkt
{

/// Worker count: hardware concurrency, capped by BIPHOTON_WKT_THREADS.
inline unsigned worker_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BIPHOTON_WKT_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1)
                n = std::min<unsigned>(n, static_cast<unsigned>(cap));
        } catch (...) {
            // unparsable cap: keep the hardware default
        }
    }
    return n;
}

/// Calls body(k) for k in [0, n).  Each index is evaluated by exactly one
/// thread with its own accumulation order, so results do not depend on the
/// schedule.
template<typename Body>
void parallel_for(std::size_t n, Body&& body)
{
    const std::size_t workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1 || n < 64) {
        for (std::size_t k = 0; k < n; ++k)
            body(k);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t k = lo; k < hi; ++k)
                body(k);
        });
    }
}

} // namespace bwkt

#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace hazepde::detail {

// Runs body(begin, end) over contiguous slices of [0, count). Each slice
// must write disjoint outputs; results then do not depend on the worker count.
template <typename Body>
void parallel_rows(std::size_t count, std::size_t workers, Body&& body) {
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
    if (workers == 1) {
        body(std::size_t{0}, count);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        if (begin < end) pool.emplace_back([&body, begin, end] { body(begin, end); });
    }
    body(std::size_t{0}, std::min(count, chunk));
}

}  // namespace hazepde::detail

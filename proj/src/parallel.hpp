#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace pekt::detail {

/// Evaluates fn(0..count-1) on up to `threads` workers and returns the
/// results in index order, so any later reduction is deterministic.
template <class T, class Fn>
std::vector<T> ordered_map(std::size_t count, unsigned threads, Fn fn) {
    std::vector<std::optional<T>> slots(count);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    slots[i].emplace(fn(i));
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        };
        std::vector<std::jthread> pool;
        const auto n = std::min<std::size_t>(threads, count);
        for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
        pool.clear();
        if (error) std::rethrow_exception(error);
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace pekt::detail

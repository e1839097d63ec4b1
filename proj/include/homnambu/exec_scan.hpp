#pragma once

#include <cstddef>
#include <optional>

#include "homnambu/check_report.hpp"

namespace homnambu::detail {

/* Scans [0, count) for the first index where `fails` returns true.
 *
 * Serial mode is the reference implementation: a plain left-to-right scan
 * with early exit.  Parallel mode evaluates the predicate concurrently
 * and min-reduces failing indices, so it returns exactly the same index
 * as the serial scan.  The predicate must be pure. */
template <class Pred>
std::optional<std::size_t> first_failure(std::size_t count, Exec mode, Pred&& fails) {
    if (mode == Exec::serial) {
        for (std::size_t i = 0; i < count; ++i)
            if (fails(i)) return i;
        return std::nullopt;
    }
    std::size_t best = count;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
    for (std::size_t i = 0; i < count; ++i) {
        if (i < best && fails(i)) best = i;
    }
#else
    for (std::size_t i = 0; i < count; ++i) {
        if (fails(i)) {
            best = i;
            break;
        }
    }
#endif
    if (best == count) return std::nullopt;
    return best;
}

}  // namespace homnambu::detail

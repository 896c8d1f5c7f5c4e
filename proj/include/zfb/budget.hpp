#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "zfb/errors.hpp"

namespace zfb {

/// Caller-supplied limits for the exhaustive solvers. A solver that runs
/// out throws BudgetExceeded rather than returning an inexact value.
struct Budget {
    std::optional<std::chrono::milliseconds> time;
    std::optional<std::uint64_t> nodes;
};

class BudgetClock {
public:
    explicit BudgetClock(const Budget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    /// Counts one unit of work; checks the wall clock every 1024 units.
    void tick(const char* what) {
        ++used_;
        if (budget_.nodes && used_ > *budget_.nodes)
            throw BudgetExceeded(what);
        if (budget_.time && (used_ & 1023u) == 0 &&
            std::chrono::steady_clock::now() - start_ > *budget_.time)
            throw BudgetExceeded(what);
    }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t used_ = 0;
};

} // namespace zfb

#pragma once

#include <chrono>
#include <cstdint>

#include "errors.hpp"

namespace naeflow {

struct SolverStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
};

/// Optional limits and statistics sink shared by the exact solvers.
/// Zero limits mean unlimited.
struct SearchControl {
    std::uint64_t max_nodes = 0;
    double max_seconds = 0.0;
    SolverStats* stats = nullptr;
};

namespace detail {

class search_budget {
public:
    explicit search_budget(const SearchControl& ctl)
        : ctl_(ctl), start_(std::chrono::steady_clock::now())
    {
    }

    void node()
    {
        ++nodes_;
        if (ctl_.stats)
            ++ctl_.stats->nodes;
        if (ctl_.max_nodes && nodes_ > ctl_.max_nodes)
            throw search_limit_exceeded("node limit exceeded");
        if (ctl_.max_seconds > 0 && (nodes_ & 0x3ff) == 0) {
            std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
            if (el.count() > ctl_.max_seconds)
                throw search_limit_exceeded("time limit exceeded");
        }
    }

    void propagation(std::uint64_t k = 1)
    {
        if (ctl_.stats)
            ctl_.stats->propagations += k;
    }

private:
    SearchControl ctl_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail
} // namespace naeflow

#pragma once

#include "tbn/errors.hpp"

#include <cstdint>
#include <string>

namespace tbn {

/// Work limit for an exhaustive search, counted in search nodes.
struct Budget
{
    std::uint64_t max_nodes = 200'000'000;
};

class NodeCounter
{
public:
    NodeCounter(const Budget& budget, std::string what) : limit_{budget.max_nodes}, what_{std::move(what)} {}

    void tick()
    {
        if (++count_ > limit_)
            throw BudgetExceeded(what_ + " exceeded its budget of " + std::to_string(limit_) + " nodes");
    }

    [[nodiscard]] std::uint64_t count() const { return count_; }

private:
    std::uint64_t limit_;
    std::uint64_t count_ = 0;
    std::string what_;
};

} // namespace tbn

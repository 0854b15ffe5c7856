#pragma once

// Exact-cover dynamic program shared by the stable-configuration solver and
// the entropy-gap search. Internal to the library.

#include "tbn/core.hpp"
#include "tbn/budget.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace tbn::detail {

constexpr int infeasible = -1;

// Exact cover of a monomer count vector by basis polymers, maximising the
// number of polymers. Monomer types are processed in a fixed priority order;
// at each state the first type with copies left is the pivot, and every copy
// of it is covered at once by choosing a multiset of the polymers whose
// highest-priority type is the pivot. Each configuration is therefore reached
// along exactly one path, and each polymer type is chosen at a single step,
// which makes per-polymer upper bounds local to that step.
class CoverDp
{
public:
    CoverDp(std::vector<Counts> polymers, std::vector<int> upper, const std::vector<bool>& allowed, std::size_t types,
            NodeCounter& counter)
        : polymers_{std::move(polymers)}, upper_{std::move(upper)}, counter_{counter}
    {
        std::vector<int> candidates(types, 0);
        for (std::size_t p = 0; p < polymers_.size(); ++p)
            if (allowed[p])
                for (std::size_t t = 0; t < types; ++t)
                    if (polymers_[p][t] > 0)
                        ++candidates[t];
        order_.resize(types);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t x, std::size_t y) { return candidates[x] < candidates[y]; });
        by_lead_.resize(types);
        for (std::size_t p = 0; p < polymers_.size(); ++p) {
            if (!allowed[p])
                continue;
            for (auto t : order_)
                if (polymers_[p][t] > 0) {
                    by_lead_[t].push_back(p);
                    break;
                }
        }
    }

    int best(Counts& r)
    {
        auto pivot = pivot_of(r);
        if (!pivot)
            return 0;
        if (auto it = memo_.find(r); it != memo_.end())
            return it->second;
        counter_.tick();
        int result = infeasible;
        choose(*pivot, 0, r, 0, [&](Counts& rest, int used) {
            int b = best(rest);
            if (b != infeasible)
                result = std::max(result, used + b);
            return false;
        });
        memo_.emplace(r, result);
        return result;
    }

    /// One optimal solution for `r` as per-polymer counts; `r` must be feasible.
    void extract(Counts& r, std::vector<int>& x)
    {
        const int target = best(r);
        auto pivot = pivot_of(r);
        if (!pivot)
            return;
        choose(*pivot, 0, r, 0, [&](Counts& rest, int used) {
            if (used + best(rest) != target)
                return false;
            for (auto [p, k] : chosen_)
                x[p] += k;
            auto saved = chosen_;
            chosen_.clear();
            extract(rest, x);
            chosen_ = std::move(saved);
            return true;
        });
    }

    /// Calls `emit` with per-polymer counts for every optimal solution; stops once `emit` returns false.
    bool enumerate(Counts& r, std::vector<int>& x, const std::function<bool(const std::vector<int>&)>& emit)
    {
        auto pivot = pivot_of(r);
        if (!pivot)
            return emit(x);
        const int target = best(r);
        bool keep_going = true;
        choose(*pivot, 0, r, 0, [&](Counts& rest, int used) {
            if (used + best(rest) != target)
                return false;
            for (auto [p, k] : chosen_)
                x[p] += k;
            auto saved = chosen_;
            chosen_.clear();
            keep_going = enumerate(rest, x, emit);
            chosen_ = std::move(saved);
            for (auto [p, k] : chosen_)
                x[p] -= k;
            return !keep_going;
        });
        return keep_going;
    }

private:
    std::optional<std::size_t> pivot_of(const Counts& r) const
    {
        for (auto t : order_)
            if (r[t] > 0)
                return t;
        return std::nullopt;
    }

    // Enumerates multisets of the pivot's candidates covering every copy of the pivot.
    // `leaf` returns true to stop the enumeration.
    template <class Leaf>
    bool choose(std::size_t pivot, std::size_t i, Counts& rest, int used, Leaf&& leaf)
    {
        if (rest[pivot] == 0)
            return leaf(rest, used);
        const auto& cands = by_lead_[pivot];
        if (i == cands.size())
            return false;
        const auto p = cands[i];
        const auto& poly = polymers_[p];
        int most = upper_[p];
        for (std::size_t t = 0; t < poly.size(); ++t)
            if (poly[t] > 0)
                most = std::min(most, rest[t] / poly[t]);
        for (int k = most; k >= 0; --k) {
            for (std::size_t t = 0; t < poly.size(); ++t)
                rest[t] -= k * poly[t];
            if (k > 0)
                chosen_.emplace_back(p, k);
            bool stop = choose(pivot, i + 1, rest, used + k, leaf);
            if (k > 0)
                chosen_.pop_back();
            for (std::size_t t = 0; t < poly.size(); ++t)
                rest[t] += k * poly[t];
            if (stop)
                return true;
        }
        return false;
    }

    std::vector<Counts> polymers_;
    std::vector<int> upper_;
    NodeCounter& counter_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<std::size_t>> by_lead_;
    std::unordered_map<Counts, int, detail::CountsHash> memo_;
    std::vector<std::pair<std::size_t, int>> chosen_;
};

// Basis polymers as count vectors over the TBN, with their upper bounds.
struct Program
{
    std::vector<Polymer> polymers;
    std::vector<Counts> counts;
    std::vector<int> upper;
    Counts target;

    Program(const Tbn& tbn, const std::vector<Polymer>& basis, const std::map<Polymer, int>& flip_bounds)
        : target(tbn.counts().begin(), tbn.counts().end())
    {
        for (const auto& p : basis) {
            Counts c(tbn.type_count(), 0);
            bool usable = true;
            for (const auto& [m, k] : p.monomers()) {
                auto i = tbn.index_of(m);
                if (!i || k > tbn.counts()[*i]) {
                    usable = false;
                    break;
                }
                c[*i] = k;
            }
            if (!usable)
                continue;
            auto bound = flip_bounds.find(p);
            polymers.push_back(p);
            counts.push_back(std::move(c));
            upper.push_back(bound == flip_bounds.end() ? INT_MAX : bound->second);
        }
    }

    [[nodiscard]] std::optional<std::size_t> index_of(const Polymer& p) const
    {
        auto it = std::find(polymers.begin(), polymers.end(), p);
        if (it == polymers.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - polymers.begin());
    }

    [[nodiscard]] Configuration configuration(const std::shared_ptr<const Tbn>& tbn, const std::vector<int>& x) const
    {
        std::map<Polymer, int> out;
        for (std::size_t p = 0; p < x.size(); ++p)
            if (x[p] > 0)
                out.emplace(polymers[p], x[p]);
        return Configuration{tbn, std::move(out)};
    }
};

} // namespace tbn::detail

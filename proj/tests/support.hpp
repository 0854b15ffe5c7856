#pragma once

// Shared helpers for the test suites: random TBNs and small brute-force
// oracles that do not go through the library's search code.

#include "tbn/core.hpp"
#include "tbn/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace tbn::testing {

using Counts = std::vector<int>;
using Parts = std::vector<Counts>;

struct RandomTbnShape
{
    int max_monomers = 12;
    int site_names = 4;
    int max_types = 5;
    int max_sites_per_monomer = 3;
};

/// A random star-limiting TBN with between 1 and `max_monomers` monomers.
inline std::shared_ptr<const Tbn> random_tbn(std::mt19937& rng, const RandomTbnShape& shape = {})
{
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>{lo, hi}(rng); };
    const int types = pick(1, shape.max_types);
    int remaining = pick(1, shape.max_monomers);
    std::vector<std::pair<MonomerType, int>> entries;
    for (int t = 0; t < types && remaining > 0; ++t) {
        std::vector<SiteType> sites;
        const int size = pick(1, shape.max_sites_per_monomer);
        for (int s = 0; s < size; ++s)
            sites.emplace_back(std::string(1, static_cast<char>('a' + pick(0, shape.site_names - 1))), pick(0, 1) == 1);
        const int count = t + 1 == types ? remaining : pick(1, remaining);
        remaining -= count;
        entries.emplace_back(MonomerType{sites}, count);
    }
    return std::make_shared<const Tbn>(normalize_polarity(Tbn{entries}).tbn);
}

/// A star-limiting TBN built by drawing the starred monomers' sites without
/// replacement from the unstarred ones. Such instances have a finite entropy
/// gap far more often than `random_tbn` ones.
inline std::shared_ptr<const Tbn> planted_tbn(std::mt19937& rng, int max_monomers = 10, int site_names = 4)
{
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>{lo, hi}(rng); };
    std::vector<std::pair<MonomerType, int>> entries;
    std::vector<std::string> pool;
    const int unstarred = pick(2, max_monomers - 2);
    for (int i = 0; i < unstarred; ++i) {
        std::vector<SiteType> sites;
        for (int j = pick(1, 2); j > 0; --j) {
            sites.emplace_back(std::string(1, static_cast<char>('a' + pick(0, site_names - 1))), false);
            pool.push_back(sites.back().name);
        }
        entries.emplace_back(MonomerType{sites}, 1);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int i = pick(1, max_monomers - unstarred); i > 0 && !pool.empty(); --i) {
        std::vector<SiteType> sites;
        for (int j = std::min<int>(pick(1, 3), static_cast<int>(pool.size())); j > 0; --j) {
            sites.emplace_back(pool.back(), true);
            pool.pop_back();
        }
        entries.emplace_back(MonomerType{sites}, 1);
    }
    return std::make_shared<const Tbn>(entries);
}

/// Self-saturation computed straight from the site lists.
inline bool oracle_self_saturated(const Tbn& tbn, const Counts& counts)
{
    std::map<std::string, int> net;
    for (std::size_t t = 0; t < counts.size(); ++t)
        for (const auto& s : tbn.types()[t].sites())
            net[s.name] += (s.starred ? -1 : 1) * counts[t];
    return std::all_of(net.begin(), net.end(), [](const auto& kv) { return kv.second >= 0; });
}

/// Calls `f` on every sub-multiset of `bound` (including the empty one).
inline void for_each_submultiset(const Counts& bound, const std::function<void(const Counts&)>& f)
{
    Counts c(bound.size(), 0);
    while (true) {
        f(c);
        std::size_t i = 0;
        while (i < c.size() && c[i] == bound[i])
            c[i++] = 0;
        if (i == c.size())
            return;
        ++c[i];
    }
}

inline Counts minus(const Counts& a, const Counts& b)
{
    Counts out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

inline bool is_zero(const Counts& c)
{
    return std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
}

/// True iff the parts of `fine` can be grouped so that each group sums to one part of `coarse`.
inline bool oracle_refines(const Parts& coarse, const Parts& fine)
{
    std::vector<Counts> need = coarse;
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == fine.size())
            return std::all_of(need.begin(), need.end(), is_zero);
        for (auto& target : need) {
            bool fits = true;
            for (std::size_t t = 0; t < target.size(); ++t)
                fits = fits && fine[i][t] <= target[t];
            if (!fits)
                continue;
            for (std::size_t t = 0; t < target.size(); ++t)
                target[t] -= fine[i][t];
            const bool ok = place(i + 1);
            for (std::size_t t = 0; t < target.size(); ++t)
                target[t] += fine[i][t];
            if (ok)
                return true;
        }
        return false;
    };
    return place(0);
}

inline Parts parts_of(const Configuration& config)
{
    Parts parts;
    for (const auto& [p, c] : config.polymers())
        for (int i = 0; i < c; ++i)
            parts.push_back(config.tbn().counts_in(p));
    return parts;
}

inline Configuration configuration_of(const std::shared_ptr<const Tbn>& tbn, const Parts& parts)
{
    std::vector<Polymer> polymers;
    for (const auto& p : parts)
        polymers.push_back(tbn->polymer_from_counts(p));
    return Configuration{tbn, polymers};
}

/// Every saturated partition of the TBN, as part lists, via multiset partitions.
inline std::vector<Parts> saturated_partitions(const Tbn& tbn)
{
    std::vector<Parts> out;
    for_each_multiset_partition(tbn.counts(), [&](const std::vector<std::vector<int>>& parts) {
        if (std::all_of(parts.begin(), parts.end(), [&](const Counts& p) { return oracle_self_saturated(tbn, p); }))
            out.push_back(parts);
        return true;
    });
    return out;
}

struct GapOracle
{
    int optimum = 0;
    std::vector<Parts> stable;
    std::vector<Parts> saturated;
    std::optional<int> gap; // nullopt: infinite
};

/// Entropy gap straight from the definition, over every saturated partition.
inline GapOracle oracle_gap(const Tbn& tbn)
{
    GapOracle o;
    o.saturated = saturated_partitions(tbn);
    for (const auto& s : o.saturated)
        o.optimum = std::max(o.optimum, static_cast<int>(s.size()));
    for (const auto& s : o.saturated)
        if (static_cast<int>(s.size()) == o.optimum)
            o.stable.push_back(s);
    for (const auto& s : o.saturated) {
        const int d = o.optimum - static_cast<int>(s.size());
        if (d == 0)
            continue;
        bool splits = std::any_of(o.stable.begin(), o.stable.end(), [&](const Parts& st) { return oracle_refines(s, st); });
        if (!splits && (!o.gap || d < *o.gap))
            o.gap = d;
    }
    return o;
}

} // namespace tbn::testing

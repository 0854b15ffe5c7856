#include "tbn/solver.hpp"

#include "tbn/errors.hpp"

#include <algorithm>
#include <numeric>

namespace tbn {

void for_each_multiset_partition(std::span<const int> multiplicities,
                                 const std::function<bool(const std::vector<std::vector<int>>&)>& visit)
{
    // Component stack entries: c = component index, u = copies still unallocated, v = copies in this part.
    struct Entry
    {
        std::size_t c = 0;
        int u = 0;
        int v = 0;
    };

    std::vector<std::size_t> components;
    std::vector<int> mult;
    for (std::size_t j = 0; j < multiplicities.size(); ++j) {
        if (multiplicities[j] < 0)
            throw InvalidArgument("negative multiplicity");
        if (multiplicities[j] > 0) {
            components.push_back(j);
            mult.push_back(multiplicities[j]);
        }
    }
    const std::size_t m = mult.size();
    const std::size_t n = static_cast<std::size_t>(std::accumulate(mult.begin(), mult.end(), 0));
    if (n == 0) {
        visit({});
        return;
    }

    std::vector<Entry> stack(n * m + 1);
    std::vector<std::size_t> f(n + 1, 0);
    // M1: initialise
    for (std::size_t j = 0; j < m; ++j)
        stack[j] = Entry{j, mult[j], mult[j]};
    std::size_t a = 0, b = m, l = 0;
    f[0] = 0;
    f[1] = m;

    std::vector<std::vector<int>> parts;
    while (true) {
        // M2: subtract v from u, pushing the remainder as the next part
        while (true) {
            std::size_t j = a, k = b;
            bool x = false;
            while (j < b) {
                stack[k].u = stack[j].u - stack[j].v;
                if (stack[k].u == 0) {
                    x = true;
                } else if (!x) {
                    stack[k].c = stack[j].c;
                    stack[k].v = std::min(stack[j].v, stack[k].u);
                    x = stack[k].u < stack[j].v;
                    ++k;
                } else {
                    stack[k].c = stack[j].c;
                    stack[k].v = stack[k].u;
                    ++k;
                }
                ++j;
            }
            // M3: push if nonzero
            if (k > b) {
                a = b;
                b = k;
                ++l;
                f[l + 1] = b;
            } else {
                break;
            }
        }

        // M4: visit
        parts.assign(l + 1, std::vector<int>(multiplicities.size(), 0));
        for (std::size_t part = 0; part <= l; ++part)
            for (std::size_t e = f[part]; e < f[part + 1]; ++e)
                parts[part][components[stack[e].c]] = stack[e].v;
        parts.erase(std::remove_if(parts.begin(), parts.end(),
                                   [](const std::vector<int>& p) {
                                       return std::all_of(p.begin(), p.end(), [](int c) { return c == 0; });
                                   }),
                    parts.end());
        if (!visit(parts))
            return;

        // M5: decrease v; M6: backtrack
        while (true) {
            std::size_t j = b - 1;
            while (stack[j].v == 0)
                --j;
            if (j == a && stack[j].v == 1) {
                if (l == 0)
                    return;
                --l;
                b = a;
                a = f[l];
            } else {
                --stack[j].v;
                for (std::size_t k = j + 1; k < b; ++k)
                    stack[k].v = stack[k].u;
                break;
            }
        }
    }
}

StableReport brute_force_stable(const std::shared_ptr<const Tbn>& tbn, int max_monomers, std::size_t optima_cap)
{
    require_star_limiting(*tbn);
    if (tbn->total_monomers() > max_monomers)
        throw BudgetExceeded("brute force is limited to " + std::to_string(max_monomers) + " monomers, TBN has " +
                             std::to_string(tbn->total_monomers()));

    int best = -1;
    std::vector<std::vector<std::vector<int>>> optima;
    bool truncated = false;
    for_each_multiset_partition(tbn->counts(), [&](const std::vector<std::vector<int>>& parts) {
        const int count = static_cast<int>(parts.size());
        if (count < best)
            return true;
        for (const auto& part : parts)
            if (!detail::self_saturated(*tbn, part))
                return true;
        if (count > best) {
            best = count;
            optima.clear();
            truncated = false;
        }
        if (optima.size() == optima_cap)
            truncated = true;
        else
            optima.push_back(parts);
        return true;
    });
    if (best < 0)
        throw InternalError("no saturated partition found");

    StableReport report;
    report.certificate = Certificate::brute_force;
    report.optimum = best;
    report.optima_truncated = truncated;
    for (const auto& parts : optima) {
        std::map<Polymer, int> polymers;
        for (const auto& part : parts)
            ++polymers[tbn->polymer_from_counts(part)];
        report.all_optima.emplace_back(tbn, std::move(polymers));
    }
    std::sort(report.all_optima.begin(), report.all_optima.end());
    auto lex = std::min_element(report.all_optima.begin(), report.all_optima.end(), lex_precedes);
    if (lex != report.all_optima.end())
        report.lex_earliest = *lex;
    return report;
}

} // namespace tbn

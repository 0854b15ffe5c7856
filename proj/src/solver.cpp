#include "tbn/solver.hpp"

#include "tbn/errors.hpp"

#include "cover_dp.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>
#include <unordered_map>

namespace tbn {

namespace {

using detail::Counts;
using detail::CoverDp;
using detail::Program;
using detail::infeasible;

Configuration lex_earliest_impl(const std::shared_ptr<const Tbn>& tbn, const Program& program,
                                const std::vector<Polymer>& ordering, NodeCounter& counter)
{
    const std::size_t types = tbn->type_count();
    const std::size_t np = program.polymers.size();
    std::vector<bool> allowed(np, true);
    CoverDp full{program.counts, program.upper, allowed, types, counter};
    Counts r = program.target;
    const int optimum = full.best(r);
    if (optimum == infeasible)
        throw InternalError("no saturated configuration exists");
    std::vector<int> witness(np, 0);
    full.extract(r, witness);

    int fixed_total = 0;
    for (const auto& q : ordering) {
        auto qi = program.index_of(q);
        if (!qi)
            continue;
        const auto& qc = program.counts[*qi];
        const int w = witness[*qi];
        int value = w;
        if (w > 0) {
            auto sub_allowed = allowed;
            sub_allowed[*qi] = false;
            CoverDp sub{program.counts, program.upper, sub_allowed, types, counter};
            for (int v = 0; v < w; ++v) {
                Counts rest = r;
                for (std::size_t t = 0; t < types; ++t)
                    rest[t] -= v * qc[t];
                const int b = sub.best(rest);
                if (b == infeasible || fixed_total + v + b != optimum)
                    continue;
                std::vector<int> next(np, 0);
                sub.extract(rest, next);
                for (std::size_t p = 0; p < np; ++p)
                    if (!allowed[p])
                        next[p] = witness[p];
                next[*qi] = v;
                witness = std::move(next);
                value = v;
                break;
            }
        }
        for (std::size_t t = 0; t < types; ++t)
            r[t] -= value * qc[t];
        fixed_total += value;
        allowed[*qi] = false;
    }
    return program.configuration(tbn, witness);
}

void check_ordering(const PolymerBasis& basis, const std::vector<Polymer>& ordering)
{
    std::set<Polymer> given{ordering.begin(), ordering.end()};
    std::set<Polymer> expected{basis.polymers.begin(), basis.polymers.end()};
    if (given != expected || given.size() != ordering.size())
        throw InvalidArgument("lexicographic ordering must be a permutation of the basis");
}

} // namespace

std::string certificate_name(Certificate c)
{
    switch (c) {
    case Certificate::ip_exact: return "ip_exact";
    case Certificate::feed_forward_merge_bound: return "feed_forward_merge_bound";
    case Certificate::brute_force: return "brute_force";
    }
    return {};
}

std::vector<Polymer> default_lex_ordering(const PolymerBasis& basis, const std::map<Polymer, int>& flip_bounds)
{
    std::vector<Polymer> first, rest;
    for (const auto& p : basis.polymers)
        (flip_bounds.count(p) != 0 ? first : rest).push_back(p);
    first.insert(first.end(), rest.begin(), rest.end());
    return first;
}

Configuration lex_earliest(const std::shared_ptr<const Tbn>& tbn, const PolymerBasis& basis,
                           const std::vector<Polymer>& ordering, const std::map<Polymer, int>& flip_bounds,
                           const Budget& budget)
{
    check_ordering(basis, ordering);
    if (tbn->empty())
        return Configuration{tbn, std::map<Polymer, int>{}};
    Program program{*tbn, basis.polymers, flip_bounds};
    NodeCounter counter{budget, "lexicographic search"};
    return lex_earliest_impl(tbn, program, ordering, counter);
}

StableReport solve_stable(const std::shared_ptr<const Tbn>& tbn, const PolymerBasis& basis,
                          const std::map<Polymer, int>& flip_bounds, const SolveOptions& options)
{
    require_star_limiting(*tbn);
    StableReport report;
    report.basis_complete = basis.complete;
    if (tbn->empty()) {
        Configuration empty{tbn, std::map<Polymer, int>{}};
        report.all_optima.push_back(empty);
        if (options.compute_lex)
            report.lex_earliest = empty;
        return report;
    }

    Program program{*tbn, basis.polymers, flip_bounds};
    NodeCounter counter{options.budget, "stable configuration search"};
    std::vector<bool> allowed(program.polymers.size(), true);
    CoverDp dp{program.counts, program.upper, allowed, tbn->type_count(), counter};
    Counts r = program.target;
    report.optimum = dp.best(r);
    if (report.optimum == infeasible) {
        if (basis.complete)
            throw InternalError("star-limiting TBN has no saturated configuration over its complete basis");
        throw BudgetExceeded("no saturated configuration is reachable with polymers of at most " +
                             std::to_string(basis.size_cap_used) + " monomers");
    }

    std::vector<int> x(program.polymers.size(), 0);
    dp.enumerate(r, x, [&](const std::vector<int>& solution) {
        if (report.all_optima.size() == options.optima_cap) {
            report.optima_truncated = true;
            return false;
        }
        report.all_optima.push_back(program.configuration(tbn, solution));
        return true;
    });
    std::sort(report.all_optima.begin(), report.all_optima.end());

    if (options.compute_lex) {
        auto ordering = options.lex_ordering.empty() ? default_lex_ordering(basis, flip_bounds) : options.lex_ordering;
        check_ordering(basis, ordering);
        report.lex_earliest = lex_earliest_impl(tbn, program, ordering, counter);
    }

    if (basis.complete) {
        report.certificate = Certificate::ip_exact;
    } else if (is_feed_forward(*tbn) && certify_stable_feed_forward(report.all_optima.front())) {
        report.certificate = Certificate::feed_forward_merge_bound;
    } else {
        report.certificate = Certificate::ip_exact;
        report.optimum_is_lower_bound = true;
    }
    return report;
}

StableReport solve_stable(const std::shared_ptr<const Tbn>& tbn, std::optional<int> size_cap, const SolveOptions& options)
{
    auto basis = enumerate_basis(*tbn, size_cap, options.budget);
    return solve_stable(tbn, basis, {}, options);
}

bool lex_precedes(const Configuration& a, const Configuration& b)
{
    auto x = a.polymers().begin(), xe = a.polymers().end();
    auto y = b.polymers().begin(), ye = b.polymers().end();
    while (x != xe || y != ye) {
        if (y == ye || (x != xe && x->first < y->first))
            return false; // `a` uses a polymer `b` lacks
        if (x == xe || y->first < x->first)
            return true;
        if (x->second != y->second)
            return x->second < y->second;
        ++x;
        ++y;
    }
    return false;
}

bool certify_stable_feed_forward(const Configuration& config)
{
    if (!is_feed_forward(config.tbn()))
        throw InvalidArgument("feed-forward certificate requires a feed-forward TBN");
    return is_saturated(config) && merginess(config) == starriness(melt(config.tbn()));
}

} // namespace tbn

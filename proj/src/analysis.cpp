#include "tbn/analysis.hpp"

#include "tbn/basis.hpp"
#include "tbn/constructions.hpp"
#include "tbn/errors.hpp"

#include "cover_dp.hpp"

#include <algorithm>
#include <numeric>

namespace tbn {

namespace {

using detail::Counts;

// Depth-first enumeration of saturated configurations. The first monomer type
// with copies left is the pivot; the polymer holding one of its copies is
// chosen among the self-saturated sub-multisets of what remains, and polymers
// sharing a pivot are generated in nondecreasing order so that each
// configuration appears once.
class SaturatedSearch
{
public:
    using Visit = std::function<bool(const std::vector<Counts>&)>;
    using Prune = std::function<bool(Counts&, int)>;

    SaturatedSearch(const Tbn& tbn, NodeCounter& counter) : tbn_{tbn}, counter_{counter} {}

    void run(const Visit& visit, const Prune& prune)
    {
        visit_ = &visit;
        prune_ = &prune;
        stack_.clear();
        Counts r(tbn_.counts().begin(), tbn_.counts().end());
        descend(r, std::nullopt);
    }

private:
    bool descend(Counts& r, std::optional<std::size_t> prev)
    {
        std::optional<std::size_t> pivot;
        for (std::size_t t = 0; t < r.size(); ++t)
            if (r[t] > 0) {
                pivot = t;
                break;
            }
        if (!pivot)
            return (*visit_)(stack_);
        if (*prune_ && (*prune_)(r, static_cast<int>(stack_.size())))
            return true;

        std::vector<Counts> candidates;
        generate(r, *pivot, candidates);
        const bool constrained = prev && lead_of(stack_[*prev]) == *pivot;
        for (auto& s : candidates) {
            if (constrained && s < stack_[*prev])
                continue;
            for (std::size_t t = 0; t < r.size(); ++t)
                r[t] -= s[t];
            stack_.push_back(std::move(s));
            bool go = descend(r, stack_.size() - 1);
            s = std::move(stack_.back());
            stack_.pop_back();
            for (std::size_t t = 0; t < r.size(); ++t)
                r[t] += s[t];
            if (!go)
                return false;
        }
        return true;
    }

    static std::size_t lead_of(const Counts& s)
    {
        return static_cast<std::size_t>(std::find_if(s.begin(), s.end(), [](int c) { return c > 0; }) - s.begin());
    }

    // Self-saturated sub-multisets of `r` holding at least one copy of `pivot`.
    void generate(const Counts& r, std::size_t pivot, std::vector<Counts>& out)
    {
        const std::size_t q = r.size();
        const std::size_t w = tbn_.site_names().size();
        std::vector<std::vector<int>> supply(q + 1, std::vector<int>(w, 0));
        for (std::size_t t = q; t-- > pivot;) {
            auto row = tbn_.net(t);
            for (std::size_t x = 0; x < w; ++x)
                supply[t][x] = supply[t + 1][x] + std::max(0, row[x]) * r[t];
        }
        Counts s(q, 0);
        std::vector<int> net(w, 0);
        extend(pivot, pivot, r, supply, s, net, out);
    }

    void extend(std::size_t t, std::size_t pivot, const Counts& r, const std::vector<std::vector<int>>& supply, Counts& s,
                std::vector<int>& net, std::vector<Counts>& out)
    {
        counter_.tick();
        for (std::size_t x = 0; x < net.size(); ++x)
            if (-net[x] > supply[t][x])
                return;
        if (t == r.size()) {
            out.push_back(s);
            return;
        }
        auto row = tbn_.net(t);
        const int lo = t == pivot ? 1 : 0;
        for (std::size_t x = 0; x < net.size(); ++x)
            net[x] += lo * row[x];
        for (int k = lo; k <= r[t]; ++k) {
            if (k > lo)
                for (std::size_t x = 0; x < net.size(); ++x)
                    net[x] += row[x];
            s[t] = k;
            extend(t + 1, pivot, r, supply, s, net, out);
        }
        for (std::size_t x = 0; x < net.size(); ++x)
            net[x] -= r[t] * row[x];
        s[t] = 0;
    }

    const Tbn& tbn_;
    NodeCounter& counter_;
    std::vector<Counts> stack_;
    const Visit* visit_ = nullptr;
    const Prune* prune_ = nullptr;
};

std::vector<Counts> expand(const Configuration& config)
{
    std::vector<Counts> parts;
    for (const auto& [p, c] : config.polymers()) {
        auto v = config.tbn().counts_in(p);
        for (int i = 0; i < c; ++i)
            parts.push_back(v);
    }
    return parts;
}

Configuration from_parts(const std::shared_ptr<const Tbn>& tbn, const std::vector<Counts>& parts)
{
    std::map<Polymer, int> polymers;
    for (const auto& part : parts)
        ++polymers[tbn->polymer_from_counts(part)];
    return Configuration{tbn, std::move(polymers)};
}

bool is_reporter(const MonomerType& m)
{
    const auto& label = m.label();
    return label && (label->rfind("u_", 0) == 0 || label->rfind("u'_", 0) == 0);
}

class Checklist
{
public:
    explicit Checklist(std::vector<CheckResult>& out) : out_{out} {}

    void expect(std::string name, bool ok, std::string detail = {})
    {
        out_.push_back({std::move(name), ok ? CheckStatus::passed : CheckStatus::failed, std::move(detail)});
    }

    void add(std::string name, CheckStatus status, std::string detail)
    {
        out_.push_back({std::move(name), status, std::move(detail)});
    }

private:
    std::vector<CheckResult>& out_;
};

std::string describe_count(const char* what, long long got, long long expected)
{
    return std::string{what} + " " + std::to_string(got) + ", expected " + std::to_string(expected);
}

} // namespace

std::string gap_string(const GapValue& gap)
{
    if (std::holds_alternative<InfiniteGap>(gap))
        return "infinite";
    return std::to_string(std::get<int>(gap));
}

void for_each_saturated_configuration(const Tbn& tbn, const Budget& budget,
                                      const std::function<bool(const std::vector<Counts>&)>& visit)
{
    require_star_limiting(tbn);
    NodeCounter counter{budget, "saturated configuration enumeration"};
    SaturatedSearch search{tbn, counter};
    search.run(visit, {});
}

EntropyGapReport entropy_gap(const std::shared_ptr<const Tbn>& tbn, const StableReport& report, const Budget& budget)
{
    if (!report.optima_complete())
        throw InvalidArgument("entropy gap needs the complete list of stable configurations");
    require_star_limiting(*tbn);
    EntropyGapReport out;
    const int optimum = report.optimum;
    std::vector<std::vector<Counts>> stable;
    for (const auto& c : report.all_optima)
        stable.push_back(expand(c));

    NodeCounter counter{budget, "entropy gap search"};

    // Upper bound on polymers obtainable from the monomers left: exact via the basis when it fits the budget.
    std::optional<detail::Program> program;
    std::optional<detail::CoverDp> dp;
    try {
        auto basis = enumerate_basis(*tbn, exhaustive_size_cap(*tbn), budget);
        program.emplace(*tbn, basis.polymers, std::map<Polymer, int>{});
        dp.emplace(program->counts, program->upper, std::vector<bool>(program->polymers.size(), true),
                   tbn->type_count(), counter);
    } catch (const BudgetExceeded&) {
    }
    auto most_polymers = [&](Counts& rest) {
        return dp ? dp->best(rest) : std::accumulate(rest.begin(), rest.end(), 0);
    };

    SaturatedSearch search{*tbn, counter};
    int distance = 1;
    try {
        // Deepen the admissible distance one step at a time, so the first witness is a minimum.
        for (; distance < optimum; ++distance) {
            bool found = false;
            search.run(
                [&](const std::vector<Counts>& parts) {
                    ++out.configurations_examined;
                    const int count = static_cast<int>(parts.size());
                    if (count == optimum)
                        return true;
                    for (const auto& s : stable)
                        if (detail::splits_to_counts(parts, s))
                            return true;
                    out.gap = optimum - count;
                    out.witness = from_parts(tbn, parts);
                    found = true;
                    return false;
                },
                [&](Counts& rest, int count) {
                    const int more = most_polymers(rest);
                    return more == detail::infeasible || count + more < optimum - distance;
                });
            if (found) {
                out.lower_bound = distance;
                return out;
            }
        }
        out.gap = InfiniteGap{};
        out.lower_bound = std::max(1, optimum);
    } catch (const BudgetExceeded&) {
        out.exhaustive = false;
        out.gap = InfiniteGap{};
        out.lower_bound = distance;
    }
    return out;
}

int tbn_distance(const StableReport& t, const StableReport& t_prime)
{
    if (!t.optima_complete() || !t_prime.optima_complete())
        throw InvalidArgument("TBN distance needs the complete list of stable configurations of both TBNs");
    int best = -1;
    for (const auto& a : t.all_optima)
        for (const auto& b : t_prime.all_optima) {
            int d = config_distance(a, b);
            if (best < 0 || d < best)
                best = d;
        }
    return best;
}

std::string status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::partial: return "partial";
    case CheckStatus::skipped: return "skipped";
    }
    return {};
}

bool VerifyReport::ok() const
{
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::failed; });
}

VerifyReport verify_amplifier(int n, int k, const VerifyOptions& options)
{
    const bool tr = options.translators;
    const AmplifierSpec plain_spec{n, k, false, tr};
    const AmplifierSpec analyte_spec{n, k, true, tr};
    plain_spec.validate();

    auto t = build_amplifier(plain_spec);
    auto ta = build_amplifier(analyte_spec);
    auto sigma = reference_configuration(plain_spec);
    auto sigma_a = reference_configuration(analyte_spec);

    VerifyReport report;
    report.n = n;
    report.k = k;
    report.translators = tr;
    report.monomers = t->total_monomers();
    report.analyte_monomers = ta->total_monomers();
    report.reference_polymers = sigma.polymer_count();
    report.analyte_reference_polymers = sigma_a.polymer_count();
    report.distance = config_distance(sigma, sigma_a);
    Checklist check{report.checks};

    const int half_up = (k + 1) / 2;
    const long long two_n = 1LL << n;

    check.expect("star_limiting", t->is_star_limiting() && ta->is_star_limiting());
    check.expect("feed_forward", is_feed_forward(*t) && is_feed_forward(*ta));
    check.expect("reference.saturated", is_saturated(sigma), std::to_string(sigma.polymer_count()) + " polymers");
    check.expect("analyte.reference.saturated", is_saturated(sigma_a),
                 std::to_string(sigma_a.polymer_count()) + " polymers");
    check.expect("analyte.reference.certified", certify_stable_feed_forward(sigma_a),
                 "merginess " + std::to_string(merginess(sigma_a)) + ", starriness of melt " +
                     std::to_string(starriness(melt(ta))));
    {
        const int excess = merginess(sigma) - starriness(melt(t));
        check.expect("reference.merge_excess", excess == half_up - 1, describe_count("excess merges", excess, half_up - 1));
    }

    // Solver: optimum and uniqueness, exhaustive when the basis fits the budget.
    std::optional<StableReport> solved_plain, solved_analyte;
    auto solve_side = [&](const char* name, const std::shared_ptr<const Tbn>& tbn, const Configuration& reference,
                          bool expect_unique, std::optional<StableReport>& out) {
        const std::string prefix = name;
        try {
            auto basis = enumerate_basis(*tbn, exhaustive_size_cap(*tbn), options.budget);
            SolveOptions solve_options;
            solve_options.budget = options.budget;
            solve_options.compute_lex = false;
            out = solve_stable(tbn, basis, {}, solve_options);
        } catch (const BudgetExceeded& e) {
            // A certified reference still pins the optimum, but says nothing about uniqueness.
            if (is_feed_forward(*tbn) && certify_stable_feed_forward(reference))
                check.add(prefix + "solver.optimum", CheckStatus::partial,
                          "optimum " + std::to_string(reference.polymer_count()) +
                              " by merge certificate; " + e.what());
            else
                check.add(prefix + "solver.optimum", CheckStatus::skipped, e.what());
            check.add(prefix + "solver.unique", CheckStatus::skipped, e.what());
            return;
        }
        check.expect(prefix + "solver.optimum", out->optimum == reference.polymer_count(),
                     describe_count("optimum", out->optimum, reference.polymer_count()));
        const bool listed = std::find(out->all_optima.begin(), out->all_optima.end(), reference) != out->all_optima.end();
        if (!expect_unique) {
            check.expect(prefix + "solver.reference_is_stable", listed,
                         std::to_string(out->all_optima.size()) + " stable configurations");
            return;
        }
        check.expect(prefix + "solver.unique", out->unique().value_or(false) && listed,
                     std::to_string(out->all_optima.size()) + " stable configuration(s)");
    };
    solve_side("", t, sigma, true, solved_plain);
    solve_side("analyte.", ta, sigma_a, !tr, solved_analyte);

    if (ta->total_monomers() <= 12) {
        auto brute_plain = brute_force_stable(t);
        auto brute_analyte = brute_force_stable(ta);
        check.expect("brute_force.unique", brute_plain.all_optima.size() == 1 && brute_plain.all_optima[0] == sigma,
                     std::to_string(brute_plain.all_optima.size()) + " stable configuration(s)");
        if (!tr)
            check.expect("analyte.brute_force.unique",
                         brute_analyte.all_optima.size() == 1 && brute_analyte.all_optima[0] == sigma_a,
                         std::to_string(brute_analyte.all_optima.size()) + " stable configuration(s)");
    }

    // Reporters: every u and u' copy is bound without the analyte and free with it.
    {
        int bound = 0, free = 0, reporters = 0;
        for (const auto& [p, c] : sigma.polymers())
            for (const auto& [m, k2] : p.monomers())
                if (is_reporter(m)) {
                    reporters += c * k2;
                    if (p.size() > 1)
                        bound += c * k2;
                }
        for (const auto& [p, c] : sigma_a.polymers())
            for (const auto& [m, k2] : p.monomers())
                if (is_reporter(m) && p.size() == 1)
                    free += c * k2;
        check.expect("reporters.bound", bound == reporters, describe_count("bound", bound, reporters));
        check.expect("reporters.freed", free == reporters, describe_count("free", free, reporters));
        check.expect("reporters.count", reporters >= two_n, describe_count("reporters", reporters, two_n));
    }

    // Type and size counts.
    {
        const long long types = 4LL * n * k + 1 + half_up + (tr ? 2LL * (n - 1) + 2LL * n : 0);
        check.expect("monomer_types", static_cast<long long>(t->type_count()) == types &&
                                          static_cast<long long>(ta->type_count()) == types + 1,
                     describe_count("types", static_cast<long long>(ta->type_count()), types + 1));
        const long long domains = (2LL * n + 1) * k * k;
        check.expect("domain_types", static_cast<long long>(ta->site_names().size()) == domains,
                     describe_count("domains", static_cast<long long>(ta->site_names().size()), domains));
        std::size_t largest = 0;
        for (const auto& m : ta->types())
            largest = std::max(largest, m.total_sites());
        // s monomers carry 3k sites, which exceeds k^2 only at k = 2.
        const long long expected = tr ? 2LL * k * k : std::max(1LL * k * k, 3LL * k);
        check.expect("largest_monomer", static_cast<long long>(largest) == expected,
                     describe_count("sites", static_cast<long long>(largest), expected));
    }

    check.expect("distance", tr ? report.distance > two_n : report.distance >= two_n,
                 "reference distance " + std::to_string(report.distance));
    if (solved_plain && solved_analyte && solved_plain->optima_complete() && solved_analyte->optima_complete()) {
        const int d = tbn_distance(*solved_plain, *solved_analyte);
        check.expect("tbn_distance", tr ? d > two_n : d >= two_n, "distance " + std::to_string(d));
    } else {
        check.add("tbn_distance", CheckStatus::skipped, "stable configurations not fully enumerated");
    }

    if (tr) {
        const int largest = sigma_a.largest_polymer();
        check.expect("analyte.reference.largest_polymer", largest <= k + 3,
                     describe_count("monomers", largest, k + 3));
    }
    return report;
}

} // namespace tbn

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "support.hpp"

#include "tbn/analysis.hpp"
#include "tbn/basis.hpp"
#include "tbn/bounds.hpp"
#include "tbn/constructions.hpp"
#include "tbn/io.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tbn;
using testing::Parts;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome
{
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::string join(const std::vector<std::string>& xs)
{
    std::string out;
    for (const auto& x : xs)
        out += (out.empty() ? "" : "; ") + x;
    return out;
}

StableReport solve_all(const std::shared_ptr<const Tbn>& t)
{
    return solve_stable(t, exhaustive_size_cap(*t));
}

bool is_reporter(const MonomerType& m)
{
    const auto& label = m.label();
    return label && (label->rfind("u_", 0) == 0 || label->rfind("u'_", 0) == 0);
}

// Reporter copies split by whether their polymer is a singleton.
std::pair<int, int> reporters(const Configuration& c)
{
    int bound = 0, free = 0;
    for (const auto& [p, count] : c.polymers())
        for (const auto& [m, k] : p.monomers())
            if (is_reporter(m))
                (p.size() == 1 ? free : bound) += count * k;
    return {bound, free};
}

std::string slurp(const std::string& path)
{
    std::ifstream in{path, std::ios::binary};
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome criterion1()
{
    Outcome o;
    const auto start = Clock::now();
    auto ex = worked_examples().at("four_monomers");
    auto report = solve_all(ex.tbn);
    o.require(report.optimum == 3, "optimum 3");
    o.require(report.unique() == true, "single stable configuration");
    o.require(!report.all_optima.empty() && report.all_optima.front() == ex.configurations[2],
              "stable configuration is the pictured one");
    const auto& two = ex.configurations[1];
    o.require(two.polymer_count() == 2 && is_saturated(two), "2-polymer configuration saturated");
    o.require(is_saturated(two) && distance_to_stability(two, report.optimum) == 1, "distance to stability 1");
    const double t = seconds_since(start);
    o.require(t < 1.0, "under 1 s");
    o.note("optimum " + std::to_string(report.optimum) + ", " + std::to_string(t) + " s");
    return o;
}

Outcome criterion2()
{
    Outcome o;
    const auto start = Clock::now();
    AmplifierSpec plain{2, 3, false, false}, analyte{2, 3, true, false};
    auto t = build_amplifier(plain);
    o.require(t->total_monomers() == 39, "39 monomers");
    auto sigma = reference_configuration(plain);
    auto sigma_a = reference_configuration(analyte);
    o.require(is_saturated(sigma) && sigma.polymer_count() == 19, "reference saturated with 19 polymers");
    o.require(is_saturated(sigma_a) && sigma_a.polymer_count() == 21, "analyte reference saturated with 21 polymers");
    o.require(certify_stable_feed_forward(sigma_a), "analyte reference certified stable");
    const int d = config_distance(sigma, sigma_a);
    o.require(d == 40, "distance 40");
    const double secs = seconds_since(start);
    o.require(secs < 10.0, "under 10 s");
    o.note("distance " + std::to_string(d) + ", " + std::to_string(secs) + " s");
    return o;
}

Outcome criterion3()
{
    Outcome o;
    const auto start = Clock::now();
    AmplifierSpec plain{1, 2, false, false}, analyte{1, 2, true, false};
    auto t = build_amplifier(plain);
    auto ta = build_amplifier(analyte);
    o.require(t->total_monomers() == 10 && ta->total_monomers() == 11, "10 and 11 monomers");
    auto brute = brute_force_stable(t);
    auto brute_a = brute_force_stable(ta);
    auto solved = solve_all(t);
    auto solved_a = solve_all(ta);
    o.require(brute.all_optima.size() == 1, "T_{1,2} unique by brute force");
    o.require(brute_a.all_optima.size() == 1, "analyte TBN unique by brute force (found " +
                                                  std::to_string(brute_a.all_optima.size()) + " stable configurations)");
    o.require(brute.all_optima == solved.all_optima && brute_a.all_optima == solved_a.all_optima,
              "solver matches brute force");
    o.require(!brute.all_optima.empty() && brute.all_optima.front() == reference_configuration(plain),
              "brute force matches the reference configuration");
    const auto sigma_a = reference_configuration(analyte);
    o.require(std::find(brute_a.all_optima.begin(), brute_a.all_optima.end(), sigma_a) != brute_a.all_optima.end(),
              "analyte reference configuration is stable");
    const int d = tbn_distance(solved, solved_a);
    o.require(d >= 2, "distance between stable sets >= 2 (got " + std::to_string(d) + ")");
    o.note("reference distance " + std::to_string(config_distance(reference_configuration(plain), sigma_a)));
    o.require(seconds_since(start) < 60.0, "under 60 s");
    o.note("optima " + std::to_string(brute.optimum) + " / " + std::to_string(brute_a.optimum));
    return o;
}

Outcome criterion4()
{
    Outcome o;
    for (int n = 1; n <= 2; ++n)
        for (int k = 2; k <= 4; ++k) {
            const std::string at = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
            auto sigma = reference_configuration({n, k, false, false});
            auto sigma_a = reference_configuration({n, k, true, false});
            auto [bound, free] = reporters(sigma);
            auto [bound_a, free_a] = reporters(sigma_a);
            o.require(free == 0 && bound > 0, "reporters bound without analyte" + at);
            o.require(bound_a == 0, "reporters freed with analyte" + at);
            o.require(free_a >= (1 << n), "at least 2^n freed reporters" + at);
        }
    return o;
}

Outcome criterion5()
{
    Outcome o;
    std::mt19937 rng{20240601};
    int mismatches = 0, multiple = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto t = testing::random_tbn(rng, {12, 4, 5, 3});
        auto report = solve_all(t);
        auto brute = brute_force_stable(t);
        if (!report.optima_complete() || report.optimum != brute.optimum || report.all_optima != brute.all_optima)
            ++mismatches;
        multiple += report.all_optima.size() > 1;
    }
    o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    o.note("1000 instances, " + std::to_string(multiple) + " with several stable configurations");
    return o;
}

// The defining disjunction for every saturated configuration: stable, splits to
// a stable configuration, or distance to stability at least the gap.
int gap_violations(const std::shared_ptr<const Tbn>& t, const StableReport& stable, const EntropyGapReport& gap)
{
    std::vector<Parts> stable_parts;
    for (const auto& c : stable.all_optima)
        stable_parts.push_back(testing::parts_of(c));
    int violations = 0;
    for_each_saturated_configuration(*t, Budget{}, [&](const std::vector<std::vector<int>>& parts) {
        const int d = stable.optimum - static_cast<int>(parts.size());
        if (d == 0)
            return true;
        const bool splits = std::any_of(stable_parts.begin(), stable_parts.end(),
                                        [&](const Parts& s) { return testing::oracle_refines(parts, s); });
        if (!splits) {
            auto g = std::get_if<int>(&gap.gap);
            if (!g || d < *g)
                ++violations;
        }
        return true;
    });
    if (auto g = std::get_if<int>(&gap.gap); g && *g < 1)
        ++violations;
    return violations;
}

Outcome criterion6()
{
    Outcome o;
    std::vector<std::pair<std::string, std::shared_ptr<const Tbn>>> cases{
        {"four monomers", worked_examples().at("four_monomers").tbn},
        {"T_{1,2}", build_amplifier({1, 2, false, false})},
        {"T_{1,3}", build_amplifier({1, 3, false, false})},
    };
    std::mt19937 rng{777};
    for (int i = 0; i < 150; ++i) {
        cases.emplace_back("random", testing::random_tbn(rng, {10, 4, 5, 3}));
        cases.emplace_back("random", testing::planted_tbn(rng));
    }
    int violations = 0, finite = 0;
    for (const auto& [name, t] : cases) {
        auto stable = solve_all(t);
        auto gap = entropy_gap(t, stable);
        if (!gap.exhaustive) {
            o.require(false, name + " gap search incomplete");
            continue;
        }
        violations += gap_violations(t, stable, gap);
        finite += std::holds_alternative<int>(gap.gap);
        if (name != "random")
            o.note(name + " gap " + gap_string(gap.gap));
    }
    o.require(violations == 0, std::to_string(violations) + " violations of the gap definition");
    o.note(std::to_string(cases.size()) + " TBNs, " + std::to_string(finite) + " with a finite gap");

    const auto start = Clock::now();
    auto t14 = build_amplifier({1, 4, false, false});
    auto stable = solve_all(t14);
    auto gap = entropy_gap(t14, stable, Budget{200'000'000});
    const int claimed = 4 / 2 - 1;
    if (gap.exhaustive) {
        auto g = std::get_if<int>(&gap.gap);
        o.require(g && *g >= claimed, "T_{1,4} gap >= " + std::to_string(claimed));
        o.note("T_{1,4} gap " + gap_string(gap.gap) + " in " + std::to_string(seconds_since(start)) + " s");
    } else {
        o.require(gap.lower_bound >= claimed, "T_{1,4} partial lower bound");
        o.note("T_{1,4} partially verified, lower bound " + std::to_string(gap.lower_bound));
    }
    return o;
}

Outcome criterion7()
{
    Outcome o;
    AmplifierSpec spec{2, 3, true, true};
    auto t = build_amplifier(spec);
    auto sigma = reference_configuration(spec);
    o.require(is_saturated(sigma), "reference saturated");
    o.require(sigma.largest_polymer() <= 6, "largest polymer <= 6");
    const bool certified = is_feed_forward(*t) && certify_stable_feed_forward(sigma);
    o.require(certified, "reference certified stable");
    auto report = solve_stable(t, sigma.largest_polymer());
    o.require(report.optimum == sigma.polymer_count() && !report.optimum_is_lower_bound,
              "solver optimum matches the certified polymer count");
    o.note(std::to_string(t->total_monomers()) + " monomers, " + std::to_string(sigma.polymer_count()) +
           " polymers, largest " + std::to_string(sigma.largest_polymer()) + ", certificate " +
           certificate_name(report.certificate));
    return o;
}

Outcome criterion8()
{
    Outcome o;
    std::mt19937 rng{8};
    int feed_forward = 0, violations = 0, pairs = 0;
    for (int trial = 0; trial < 2000 && feed_forward < 200; ++trial) {
        auto t = testing::random_tbn(rng, {8, 4, 5, 3});
        if (!is_feed_forward(*t))
            continue;
        ++feed_forward;
        auto saturated = testing::saturated_partitions(*t);
        std::vector<int> sat_merginess;
        for (const auto& s : saturated)
            sat_merginess.push_back(merginess(testing::configuration_of(t, s)));
        for_each_multiset_partition(t->counts(), [&](const std::vector<std::vector<int>>& alpha_parts) {
            auto alpha = testing::configuration_of(t, alpha_parts);
            if (!feed_forward_order(alpha))
                return true;
            const int m = merginess(alpha), s = starriness(alpha);
            for (std::size_t i = 0; i < saturated.size(); ++i)
                if (testing::oracle_refines(saturated[i], alpha_parts)) {
                    ++pairs;
                    violations += sat_merginess[i] - m < s;
                }
            return true;
        });
    }
    o.require(feed_forward >= 100, "enough feed-forward instances");
    o.require(violations == 0, std::to_string(violations) + " violations");
    o.note(std::to_string(feed_forward) + " TBNs, " + std::to_string(pairs) + " pairs checked");
    return o;
}

Outcome criterion9()
{
    Outcome o;
    o.require(polymer_size_bound(TbnStats::make(2, 2, 2)) == 131072, "size bound 131072");
    auto prev = upper_bound_log10(TbnStats::make(2, 1, 1));
    o.require(std::isfinite(prev.value), "finite at n=2");
    for (int n = 3; n <= 10; ++n) {
        auto cur = upper_bound_log10(TbnStats::make(n, 1, 1));
        o.require(std::isfinite(cur.value), "finite at n=" + std::to_string(n));
        o.require(prev < cur, "increasing at n=" + std::to_string(n));
        prev = cur;
    }
    return o;
}

Outcome criterion10()
{
    Outcome o;
    int failures = 0;
    for (auto f : {Family::plain, Family::analyte, Family::translator, Family::translator_analyte})
        for (int n = 1; n <= 3; ++n)
            for (int k = 2; k <= 4; ++k) {
                auto spec = AmplifierSpec::of(f, n, k);
                auto t = build_amplifier(spec);
                auto text = serialize_tbn(*t);
                auto back = parse_tbn(text).tbn;
                auto sigma = reference_configuration(spec);
                failures += !(*back == *t) || serialize_tbn(*back) != text ||
                            !(parse_configuration(back, serialize_configuration(sigma)) == sigma);
            }
    std::mt19937 rng{10};
    for (int i = 0; i < 1000; ++i) {
        auto t = testing::random_tbn(rng);
        auto text = serialize_tbn(*t);
        auto back = parse_tbn(text).tbn;
        failures += !(*back == *t) || serialize_tbn(*back) != text;
    }
    o.require(failures == 0, std::to_string(failures) + " round-trip failures");

    const std::string dir = std::string{TBN_SOURCE_DIR} + "/tests/golden/";
    auto t = read_tbn_file(dir + "four_monomers.tbn").tbn;
    auto report = solve_all(t);
    o.require(serialize_report(report, ReportFormat::json) == slurp(dir + "four_monomers_solve.json"), "solve json");
    o.require(serialize_report(report, ReportFormat::text) == slurp(dir + "four_monomers_solve.txt"), "solve text");
    o.require(serialize_report(entropy_gap(t, report), ReportFormat::json) == slurp(dir + "four_monomers_gap.json"),
              "gap json");
    o.require(serialize_tbn(*build_amplifier({1, 2, false, false})) == slurp(dir + "t_1_2.tbn"), "tbn text");
    o.require(serialize_configuration(reference_configuration({1, 2, true, false})) ==
                  slurp(dir + "t_1_2_analyte_reference.cfg"),
              "configuration text");
    o.require(serialize_report(verify_amplifier(1, 2), ReportFormat::json) == slurp(dir + "verify_n1_k2.json"),
              "verify json");
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
        {"four-monomer example", criterion1},
        {"amplifier at n=2 k=3", criterion2},
        {"exhaustive uniqueness at n=1 k=2", criterion3},
        {"reporters for n<=2, k<=4", criterion4},
        {"solver versus brute force", criterion5},
        {"entropy gap properties", criterion6},
        {"translator variant at n=2 k=3", criterion7},
        {"feed-forward merge bound", criterion8},
        {"bound evaluators", criterion9},
        {"round trips and golden files", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string{"exception: "} + e.what());
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!o.notes.empty())
            std::cout << " (" << join(o.notes) << ")";
        std::cout << std::endl;
    }
    std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}

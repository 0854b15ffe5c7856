#include "tbn/constructions.hpp"

#include "tbn/errors.hpp"

#include <map>

namespace tbn {

namespace {

std::string idx(int i, int j)
{
    return std::to_string(i) + "_" + std::to_string(j);
}

SiteType domain(int i, int j, int l, bool primed, bool starred = false)
{
    return SiteType{domain_name(i, j, l, primed), starred};
}

int ceil_half(int k)
{
    return (k + 1) / 2;
}

// Labeled monomer types with copy counts, kept in generation order.
class Builder
{
public:
    void add(const std::string& label, std::vector<SiteType> sites, int copies)
    {
        auto [it, inserted] = types_.emplace(label, MonomerType{std::move(sites), label});
        if (!inserted)
            throw InternalError("duplicate monomer label " + label);
        entries_.emplace_back(it->second, copies);
    }

    [[nodiscard]] std::shared_ptr<const Tbn> tbn() const { return std::make_shared<const Tbn>(entries_); }

private:
    std::map<std::string, MonomerType> types_;
    std::vector<std::pair<MonomerType, int>> entries_;
};

// Groups monomers of a TBN into polymers by label while tracking how many copies remain.
class ConfigurationBuilder
{
public:
    explicit ConfigurationBuilder(std::shared_ptr<const Tbn> tbn) : tbn_{std::move(tbn)}
    {
        for (std::size_t t = 0; t < tbn_->type_count(); ++t)
            remaining_[*tbn_->types()[t].label()] = tbn_->counts()[t];
    }

    void add(const std::vector<std::pair<std::string, int>>& members, int copies)
    {
        if (copies == 0)
            return;
        std::vector<std::pair<MonomerType, int>> counts;
        for (const auto& [label, c] : members) {
            auto i = tbn_->index_of_label(label);
            if (!i)
                throw InternalError("unknown monomer label " + label);
            remaining_[label] -= c * copies;
            if (remaining_[label] < 0)
                throw InternalError("reference configuration overuses " + label);
            counts.emplace_back(tbn_->types()[*i], c);
        }
        polymers_[Polymer{std::move(counts)}] += copies;
    }

    [[nodiscard]] int remaining(const std::string& label) const { return remaining_.at(label); }

    /// Every remaining copy becomes a singleton polymer.
    Configuration finish()
    {
        for (const auto& [label, c] : remaining_)
            if (c > 0)
                add({{label, 1}}, c);
        return Configuration{tbn_, polymers_};
    }

private:
    std::shared_ptr<const Tbn> tbn_;
    std::map<std::string, int> remaining_;
    std::map<Polymer, int> polymers_;
};

std::string u(int i, int j) { return "u_" + idx(i, j); }
std::string s(int i, int j) { return "s_" + idx(i, j); }
std::string up(int i, int j) { return "u'_" + idx(i, j); }
std::string sp(int i, int j) { return "s'_" + idx(i, j); }
std::string p(int j) { return "p_" + std::to_string(j); }
std::string g(int i) { return "g" + std::to_string(i); }
std::string gs(int i) { return "g" + std::to_string(i) + "*"; }
std::string h(int i) { return "h" + std::to_string(i); }
std::string hs(int i) { return "h" + std::to_string(i) + "*"; }

} // namespace

Family parse_family(std::string_view name)
{
    if (name == "plain")
        return Family::plain;
    if (name == "analyte")
        return Family::analyte;
    if (name == "translator")
        return Family::translator;
    if (name == "translator-analyte")
        return Family::translator_analyte;
    throw InvalidArgument("unknown family '" + std::string{name} + "'");
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::plain: return "plain";
    case Family::analyte: return "analyte";
    case Family::translator: return "translator";
    case Family::translator_analyte: return "translator-analyte";
    }
    return {};
}

AmplifierSpec AmplifierSpec::of(Family f, int n, int k)
{
    AmplifierSpec spec{n, k, f == Family::analyte || f == Family::translator_analyte,
                       f == Family::translator || f == Family::translator_analyte};
    spec.validate();
    return spec;
}

void AmplifierSpec::validate() const
{
    if (n < 1)
        throw InvalidArgument("amplifier needs n >= 1, got " + std::to_string(n));
    if (k < 2)
        throw InvalidArgument("amplifier needs k >= 2, got " + std::to_string(k));
    if (n > 20)
        throw InvalidArgument("amplifier copy counts 2^(n-1) overflow for n > 20");
}

std::string domain_name(int i, int j, int l, bool primed)
{
    return "d_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(l) + (primed ? "_p" : "");
}

std::shared_ptr<const Tbn> build_amplifier(const AmplifierSpec& spec)
{
    spec.validate();
    const int n = spec.n, k = spec.k;
    Builder b;
    for (int i = 1; i <= n; ++i) {
        const int copies = 1 << (i - 1);
        // primes on layer i+1 domains, except past the last layer
        const bool primed = i < n;
        for (int j = 1; j <= k; ++j) {
            std::vector<SiteType> sites;
            for (int l = 1; l <= k; ++l)
                sites.push_back(domain(i, j, l, false));
            b.add(u(i, j), sites, copies);

            sites.clear();
            for (int l = 1; l <= k; ++l) {
                sites.push_back(domain(i, j, l, false, true));
                sites.push_back(domain(i + 1, l, j, false));
                sites.push_back(domain(i + 1, l, j, false));
            }
            b.add(s(i, j), sites, copies);

            sites.clear();
            for (int l = 1; l <= k; ++l) {
                sites.push_back(domain(i + 1, j, l, primed));
                sites.push_back(domain(i + 1, j, l, primed));
            }
            b.add(up(i, j), sites, copies);

            sites.clear();
            for (int l = 1; l <= k; ++l) {
                sites.push_back(domain(i + 1, j, l, primed, true));
                sites.push_back(domain(i + 1, j, l, primed, true));
                sites.push_back(domain(i, l, j, true));
            }
            b.add(sp(i, j), sites, copies);
        }
    }

    std::vector<SiteType> payoff;
    for (int l1 = 1; l1 <= k; ++l1)
        for (int l2 = 1; l2 <= k; ++l2)
            payoff.push_back(domain(1, l1, l2, true, true));
    b.add("p*", payoff, 1);
    for (int j = 1; j <= ceil_half(k); ++j) {
        std::vector<SiteType> sites;
        for (int row : {2 * j - 1, 2 * j})
            if (row <= k)
                for (int l = 1; l <= k; ++l)
                    sites.push_back(domain(1, row, l, true));
        b.add(p(j), sites, 1);
    }

    if (spec.with_analyte) {
        std::vector<SiteType> sites;
        for (int j = 1; j <= k; ++j)
            for (int l = 1; l <= k; ++l)
                sites.push_back(domain(1, j, l, false));
        b.add("a", sites, 1);
    }

    if (spec.with_translators) {
        for (int i = 2; i <= n; ++i) {
            std::vector<SiteType> plain, starred;
            for (int j = 1; j <= k; ++j)
                for (int l = 1; l <= k; ++l) {
                    plain.push_back(domain(i, j, l, false));
                    starred.push_back(domain(i, j, l, false, true));
                }
            b.add(g(i), plain, 1 << (i - 1));
            b.add(gs(i), starred, 1 << (i - 1));
        }
        for (int i = 2; i <= n + 1; ++i) {
            const bool primed = i <= n;
            std::vector<SiteType> doubled, starred;
            for (int j = 1; j <= k; ++j)
                for (int l = 1; l <= k; ++l) {
                    doubled.push_back(domain(i, j, l, primed));
                    doubled.push_back(domain(i, j, l, primed));
                    starred.push_back(domain(i, j, l, primed, true));
                }
            b.add(h(i), doubled, 1 << (i - 1));
            b.add(hs(i), starred, 1 << i);
        }
    }
    return b.tbn();
}

Configuration reference_configuration(const AmplifierSpec& spec)
{
    auto tbn = build_amplifier(spec);
    const int n = spec.n, k = spec.k;
    ConfigurationBuilder cb{tbn};

    if (!spec.with_analyte) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= k; ++j) {
                cb.add({{u(i, j), 1}, {s(i, j), 1}}, 1 << (i - 1));
                cb.add({{up(i, j), 1}, {sp(i, j), 1}}, 1 << (i - 1));
            }
        std::vector<std::pair<std::string, int>> payoff{{"p*", 1}};
        for (int j = 1; j <= ceil_half(k); ++j)
            payoff.emplace_back(p(j), 1);
        cb.add(payoff, 1);
    } else if (!spec.with_translators) {
        std::vector<std::pair<std::string, int>> giant{{"a", 1}, {"p*", 1}};
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= k; ++j) {
                giant.emplace_back(s(i, j), 1 << (i - 1));
                giant.emplace_back(sp(i, j), 1 << (i - 1));
            }
        cb.add(giant, 1);
    } else {
        // Forward chain: each group of s_{i,*} is fed by the analyte or a g_i and feeds two starred halves.
        auto layer_s = [&](int i) {
            std::vector<std::pair<std::string, int>> members;
            for (int j = 1; j <= k; ++j)
                members.emplace_back(s(i, j), 1);
            return members;
        };
        auto next_half = [&](int i) { return i < n ? gs(i + 1) : hs(n + 1); };
        auto first = layer_s(1);
        first.emplace_back("a", 1);
        first.emplace_back(next_half(1), 2);
        cb.add(first, 1);
        for (int i = 2; i <= n; ++i) {
            auto members = layer_s(i);
            members.emplace_back(g(i), 1);
            members.emplace_back(next_half(i), 2);
            cb.add(members, 1 << (i - 1));
        }
        // Backward chain: each group of s'_{i,*} is covered by h_{i+1} and covers h_i* (or p* at the first layer).
        for (int i = 1; i <= n; ++i) {
            std::vector<std::pair<std::string, int>> members{{h(i + 1), 1}, {i == 1 ? "p*" : hs(i), 1}};
            for (int j = 1; j <= k; ++j)
                members.emplace_back(sp(i, j), 1);
            cb.add(members, 1 << (i - 1));
        }
    }

    if (spec.with_translators) {
        for (int i = 2; i <= n; ++i) {
            const int pairs = std::min(cb.remaining(g(i)), cb.remaining(gs(i)));
            cb.add({{g(i), 1}, {gs(i), 1}}, pairs);
        }
        for (int i = 2; i <= n + 1; ++i) {
            const int triples = std::min(cb.remaining(h(i)), cb.remaining(hs(i)) / 2);
            cb.add({{h(i), 1}, {hs(i), 2}}, triples);
        }
    }
    return cb.finish();
}

std::map<std::string, WorkedExample> worked_examples()
{
    std::map<std::string, WorkedExample> out;
    auto site = [](const char* token) { return SiteType::parse(token); };

    {
        MonomerType m1{{site("a"), site("b")}, "m1"};
        MonomerType m2{{site("a*"), site("b*")}, "m2"};
        MonomerType m3{{site("a")}, "m3"};
        MonomerType m4{{site("b")}, "m4"};
        auto tbn = std::make_shared<const Tbn>(std::vector<std::pair<MonomerType, int>>{{m1, 1}, {m2, 1}, {m3, 1}, {m4, 1}});
        WorkedExample ex{tbn, {}};
        ex.configurations.push_back(melt(tbn));
        ex.configurations.emplace_back(tbn, std::vector<Polymer>{Polymer{{m2, m3, m4}}, Polymer{{m1}}});
        ex.configurations.emplace_back(tbn, std::vector<Polymer>{Polymer{{m1, m2}}, Polymer{{m3}}, Polymer{{m4}}});
        out.emplace("four_monomers", std::move(ex));
    }
    {
        MonomerType m1{{site("a"), site("b")}, "m1"};
        MonomerType m2{{site("a*"), site("c")}, "m2"};
        MonomerType m3{{site("b*"), site("c*")}, "m3"};
        auto tbn = std::make_shared<const Tbn>(std::vector<std::pair<MonomerType, int>>{{m1, 1}, {m2, 1}, {m3, 1}});
        WorkedExample ex{tbn, {}};
        ex.configurations.push_back(melt(tbn));
        ex.configurations.emplace_back(tbn, std::vector<Polymer>{Polymer{{m1, m3}}, Polymer{{m2}}});
        out.emplace("feed_forward", std::move(ex));
    }
    {
        MonomerType m1{{site("a"), site("b*")}, "m1"};
        MonomerType m2{{site("a*"), site("b")}, "m2"};
        auto tbn = std::make_shared<const Tbn>(std::vector<std::pair<MonomerType, int>>{{m1, 1}, {m2, 1}});
        WorkedExample ex{tbn, {}};
        ex.configurations.push_back(melt(tbn));
        ex.configurations.emplace_back(tbn, std::vector<Polymer>{Polymer{{m1, m2}}});
        out.emplace("non_feed_forward", std::move(ex));
    }
    return out;
}

} // namespace tbn

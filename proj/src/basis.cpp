#include "tbn/basis.hpp"

#include "tbn/bounds.hpp"
#include "tbn/errors.hpp"

#include <algorithm>
#include <set>

namespace tbn {

namespace {

using detail::Counts;

int clamp_to_int(const BigInt& v, int ceiling)
{
    return v > ceiling ? ceiling : static_cast<int>(v);
}

// Index-space view of a TBN restricted to the types with positive count.
struct TypeTable
{
    std::vector<std::size_t> type;  // index into the TBN
    std::vector<int> available;     // copies in the TBN
    std::vector<std::vector<int>> net; // per row, per site name
    std::size_t names = 0;

    explicit TypeTable(const Tbn& tbn) : names{tbn.site_names().size()}
    {
        for (std::size_t t = 0; t < tbn.type_count(); ++t) {
            if (tbn.counts()[t] == 0)
                continue;
            type.push_back(t);
            available.push_back(tbn.counts()[t]);
            auto row = tbn.net(t);
            net.emplace_back(row.begin(), row.end());
        }
    }

    [[nodiscard]] bool has_deficit(std::size_t row) const
    {
        return std::any_of(net[row].begin(), net[row].end(), [](int v) { return v < 0; });
    }
};

// Looks for a split of a self-saturated multiset into two non-empty
// self-saturated parts A and B. The first copy is pinned to A.
class SplitFinder
{
public:
    SplitFinder(const std::vector<std::vector<int>>& nets, const std::vector<int>& counts, NodeCounter& counter)
        : counter_{counter}
    {
        for (std::size_t r = 0; r < counts.size(); ++r)
            if (counts[r] > 0) {
                net_.push_back(nets[r]);
                count_.push_back(counts[r]);
                total_ += counts[r];
            }
        names_ = net_.empty() ? 0 : net_.front().size();
        supply_.assign(count_.size() + 1, std::vector<int>(names_, 0));
        for (std::size_t i = count_.size(); i-- > 0;)
            for (std::size_t x = 0; x < names_; ++x)
                supply_[i][x] = supply_[i + 1][x] + std::max(0, net_[i][x]) * count_[i];
    }

    bool splittable()
    {
        if (total_ < 2)
            return false;
        std::vector<int> a(names_, 0), b(names_, 0);
        return search(0, a, b, 0);
    }

private:
    bool search(std::size_t i, std::vector<int>& a, std::vector<int>& b, int in_a)
    {
        counter_.tick();
        for (std::size_t x = 0; x < names_; ++x)
            if (std::max(0, -a[x]) + std::max(0, -b[x]) > supply_[i][x])
                return false;
        if (i == count_.size())
            return in_a > 0 && in_a < total_;
        const int lo = i == 0 ? 1 : 0;
        for (int k = count_[i]; k >= lo; --k) {
            const int rest = count_[i] - k;
            for (std::size_t x = 0; x < names_; ++x) {
                a[x] += k * net_[i][x];
                b[x] += rest * net_[i][x];
            }
            bool found = search(i + 1, a, b, in_a + k);
            for (std::size_t x = 0; x < names_; ++x) {
                a[x] -= k * net_[i][x];
                b[x] -= rest * net_[i][x];
            }
            if (found)
                return true;
        }
        return false;
    }

    NodeCounter& counter_;
    std::vector<std::vector<int>> net_;
    std::vector<int> count_;
    std::vector<std::vector<int>> supply_;
    std::size_t names_ = 0;
    int total_ = 0;
};

class BasisEnumerator
{
public:
    BasisEnumerator(const Tbn& tbn, int cap, const Budget& budget)
        : tbn_{tbn}, table_{tbn}, cap_{cap}, counter_{budget, "basis enumeration"}
    {
        for (std::size_t r = 0; r < table_.type.size(); ++r)
            (table_.has_deficit(r) ? deficit_rows_ : pure_rows_).push_back(r);

        // supply_[i][x]: unstarred excess of x still obtainable from deficit rows i.. and all pure rows
        const std::size_t w = table_.names;
        std::vector<int> pure_supply(w, 0);
        for (auto r : pure_rows_)
            for (std::size_t x = 0; x < w; ++x)
                pure_supply[x] += std::max(0, table_.net[r][x]) * table_.available[r];
        supply_.assign(deficit_rows_.size() + 1, pure_supply);
        for (std::size_t i = deficit_rows_.size(); i-- > 0;) {
            auto r = deficit_rows_[i];
            for (std::size_t x = 0; x < w; ++x)
                supply_[i][x] = supply_[i + 1][x] + std::max(0, table_.net[r][x]) * table_.available[r];
        }
    }

    std::vector<Counts> run()
    {
        // Unit polymers: a single monomer is irreducible; it is self-saturated iff it has no deficit.
        for (auto r : pure_rows_) {
            Counts c(table_.type.size(), 0);
            c[r] = 1;
            found_.push_back(std::move(c));
        }
        Counts counts(table_.type.size(), 0);
        std::vector<int> net(table_.names, 0);
        if (!deficit_rows_.empty())
            deficit_search(0, counts, net, 0);
        std::vector<Counts> out;
        for (auto& c : found_) {
            Counts full(tbn_.type_count(), 0);
            for (std::size_t r = 0; r < c.size(); ++r)
                full[table_.type[r]] = c[r];
            out.push_back(std::move(full));
        }
        return out;
    }

private:
    void deficit_search(std::size_t i, Counts& counts, std::vector<int>& net, int size)
    {
        counter_.tick();
        for (std::size_t x = 0; x < table_.names; ++x)
            if (-net[x] > supply_[i][x])
                return;
        if (i == deficit_rows_.size()) {
            if (size > 0)
                cover_search(counts, net, size);
            return;
        }
        const auto r = deficit_rows_[i];
        const int most = std::min(table_.available[r], cap_ - size);
        for (int k = 0; k <= most; ++k) {
            counts[r] = k;
            if (k > 0)
                for (std::size_t x = 0; x < table_.names; ++x)
                    net[x] += table_.net[r][x];
            deficit_search(i + 1, counts, net, size + k);
        }
        for (std::size_t x = 0; x < table_.names; ++x)
            net[x] -= most * table_.net[r][x];
        counts[r] = 0;
    }

    // Adds pure monomers until every deficit is covered, keeping only inclusion-minimal covers:
    // a pure copy that could be dropped would split off as its own self-saturated polymer.
    void cover_search(Counts& counts, std::vector<int>& net, int size)
    {
        std::vector<std::size_t> useful;
        for (auto r : pure_rows_) {
            bool helps = false;
            for (std::size_t x = 0; x < table_.names && !helps; ++x)
                helps = net[x] < 0 && table_.net[r][x] > 0;
            if (helps)
                useful.push_back(r);
        }
        std::vector<std::vector<int>> supply(useful.size() + 1, std::vector<int>(table_.names, 0));
        for (std::size_t i = useful.size(); i-- > 0;)
            for (std::size_t x = 0; x < table_.names; ++x)
                supply[i][x] = supply[i + 1][x] + table_.net[useful[i]][x] * table_.available[useful[i]];
        cover_step(0, useful, supply, counts, net, size);
    }

    void cover_step(std::size_t i, const std::vector<std::size_t>& useful, const std::vector<std::vector<int>>& supply,
                    Counts& counts, std::vector<int>& net, int size)
    {
        counter_.tick();
        bool covered = true;
        for (std::size_t x = 0; x < table_.names; ++x) {
            if (net[x] < 0)
                covered = false;
            if (-net[x] > supply[i][x])
                return;
        }
        if (covered) {
            if (minimal_cover(useful, counts, net) && irreducible(counts))
                found_.push_back(counts);
            return;
        }
        if (i == useful.size())
            return;
        const auto r = useful[i];
        int needed = 0;
        for (std::size_t x = 0; x < table_.names; ++x)
            if (net[x] < 0 && table_.net[r][x] > 0)
                needed = std::max(needed, (-net[x] + table_.net[r][x] - 1) / table_.net[r][x]);
        const int most = std::min({table_.available[r], cap_ - size, needed});
        for (int k = 0; k <= most; ++k) {
            counts[r] = k;
            if (k > 0)
                for (std::size_t x = 0; x < table_.names; ++x)
                    net[x] += table_.net[r][x];
            cover_step(i + 1, useful, supply, counts, net, size + k);
        }
        for (std::size_t x = 0; x < table_.names; ++x)
            net[x] -= most * table_.net[r][x];
        counts[r] = 0;
    }

    bool minimal_cover(const std::vector<std::size_t>& useful, const Counts& counts, const std::vector<int>& net) const
    {
        for (auto r : useful) {
            if (counts[r] == 0)
                continue;
            bool still_covered = true;
            for (std::size_t x = 0; x < table_.names && still_covered; ++x)
                still_covered = net[x] - table_.net[r][x] >= 0;
            if (still_covered)
                return false;
        }
        return true;
    }

    bool irreducible(const Counts& counts)
    {
        SplitFinder finder{table_.net, counts, counter_};
        return !finder.splittable();
    }

    const Tbn& tbn_;
    TypeTable table_;
    int cap_;
    NodeCounter counter_;
    std::vector<std::size_t> deficit_rows_;
    std::vector<std::size_t> pure_rows_;
    std::vector<std::vector<int>> supply_;
    std::vector<Counts> found_;
};

} // namespace

int default_size_cap(const Tbn& tbn)
{
    auto s = TbnStats::of(tbn);
    if (s.d < 1 || s.m < 1 || s.a < 1)
        return 20;
    return clamp_to_int(polymer_size_bound(s), 20);
}

int exhaustive_size_cap(const Tbn& tbn)
{
    const int total = std::max(1, tbn.total_monomers());
    auto s = TbnStats::of(tbn);
    if (s.d < 1 || s.m < 1 || s.a < 1)
        return total;
    return clamp_to_int(polymer_size_bound(s), total);
}

PolymerBasis enumerate_basis(const Tbn& tbn, std::optional<int> size_cap, const Budget& budget)
{
    require_star_limiting(tbn);
    const int cap = size_cap.value_or(default_size_cap(tbn));
    if (cap < 1)
        throw InvalidArgument("size cap must be at least 1");

    BasisEnumerator enumerator{tbn, cap, budget};
    PolymerBasis basis;
    for (const auto& c : enumerator.run())
        basis.polymers.push_back(tbn.polymer_from_counts(c));
    std::sort(basis.polymers.begin(), basis.polymers.end());
    basis.size_cap_used = cap;
    basis.complete = cap >= exhaustive_size_cap(tbn);
    return basis;
}

bool is_irreducible(const Polymer& polymer, const Budget& budget)
{
    if (!is_self_saturated(polymer))
        throw InvalidArgument("irreducibility is defined for self-saturated polymers only");
    Tbn local{polymer.monomers()};
    TypeTable table{local};
    NodeCounter counter{budget, "irreducibility test"};
    SplitFinder finder{table.net, table.available, counter};
    return !finder.splittable();
}

MergedBasis merged_basis(const Tbn& t, const Tbn& t_prime, std::optional<int> size_cap, const Budget& budget)
{
    std::optional<MonomerType> added;
    std::set<MonomerType> types{t.types().begin(), t.types().end()};
    types.insert(t_prime.types().begin(), t_prime.types().end());
    for (const auto& m : types) {
        const int diff = t_prime.count_of(m) - t.count_of(m);
        if (diff == 0)
            continue;
        if (diff != 1 || added)
            throw InvalidArgument("second TBN must equal the first plus one copy of a single monomer");
        added = t_prime.types()[*t_prime.index_of(m)];
    }
    if (!added)
        throw InvalidArgument("second TBN must equal the first plus one copy of a single monomer");

    const int cap = size_cap.value_or(default_size_cap(t_prime));
    auto b = enumerate_basis(t, cap, budget);
    auto b_prime = enumerate_basis(t_prime, cap, budget);

    MergedBasis out{{}, {}, {}, {}, *added};
    std::set_difference(b.polymers.begin(), b.polymers.end(), b_prime.polymers.begin(), b_prime.polymers.end(),
                        std::back_inserter(out.only_t));
    std::set_difference(b_prime.polymers.begin(), b_prime.polymers.end(), b.polymers.begin(), b.polymers.end(),
                        std::back_inserter(out.only_t_prime));
    std::set_union(b.polymers.begin(), b.polymers.end(), b_prime.polymers.begin(), b_prime.polymers.end(),
                   std::back_inserter(out.basis.polymers));
    out.basis.size_cap_used = cap;
    out.basis.complete = b.complete && b_prime.complete;

    std::set<std::string> flipped;
    for (const auto& s : added->sites())
        if (s.starred)
            flipped.insert(s.name);
    const int bound = static_cast<int>(added->total_sites());
    auto involves_flip = [&](const Polymer& p) {
        for (const auto& [m, c] : p.monomers())
            for (const auto& s : m.sites())
                if (s.starred && flipped.count(s.name) != 0)
                    return true;
        return false;
    };
    for (const auto* side : {&out.only_t, &out.only_t_prime})
        for (const auto& p : *side)
            if (involves_flip(p))
                out.flip_constrained.emplace(p, bound);
    return out;
}

} // namespace tbn

#include "tbn/core.hpp"

#include "tbn/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace tbn {

namespace {

constexpr std::string_view reserved_chars = ":#{}(),";

bool has_reserved_or_space(std::string_view s)
{
    return std::any_of(s.begin(), s.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0 || reserved_chars.find(c) != std::string_view::npos;
    });
}

bool is_label(std::string_view s)
{
    return !s.empty() && !has_reserved_or_space(s);
}

} // namespace

bool is_identifier(std::string_view s)
{
    return !s.empty() && s.find('*') == std::string_view::npos && !has_reserved_or_space(s);
}

// SiteType ------------------------------------------------------------------

SiteType::SiteType(std::string name_, bool starred_) : name{std::move(name_)}, starred{starred_}
{
    if (!is_identifier(name))
        throw InvalidArgument("invalid site name '" + name + "'");
}

SiteType SiteType::parse(std::string_view token)
{
    if (!token.empty() && token.back() == '*')
        return SiteType{std::string{token.substr(0, token.size() - 1)}, true};
    return SiteType{std::string{token}, false};
}

// MonomerType ----------------------------------------------------------------

MonomerType::MonomerType(std::vector<SiteType> sites, std::optional<std::string> label)
{
    if (sites.empty())
        throw InvalidArgument("monomer type must have at least one site");
    if (label && !is_label(*label))
        throw InvalidArgument("invalid monomer label '" + *label + "'");
    std::sort(sites.begin(), sites.end());
    data_ = std::make_shared<const Data>(Data{std::move(sites), std::move(label)});
}

bool MonomerType::has_starred() const
{
    return std::any_of(sites().begin(), sites().end(), [](const SiteType& s) { return s.starred; });
}

std::string MonomerType::site_string() const
{
    std::string out;
    for (const auto& s : sites()) {
        if (!out.empty())
            out += ' ';
        out += s.str();
    }
    return out;
}

std::string MonomerType::display_name() const
{
    if (label())
        return *label();
    return "(" + site_string() + ")";
}

MonomerType MonomerType::with_label(std::optional<std::string> label) const
{
    return MonomerType{sites(), std::move(label)};
}

// Polymer ---------------------------------------------------------------------

Polymer::Polymer(std::vector<std::pair<MonomerType, int>> counts)
{
    std::map<MonomerType, int> merged;
    for (auto& [m, c] : counts) {
        if (c < 0)
            throw InvalidArgument("negative monomer count in polymer");
        if (c > 0)
            merged[m] += c;
    }
    if (merged.empty())
        throw InvalidArgument("polymer must contain at least one monomer");
    counts_.assign(merged.begin(), merged.end());
    for (const auto& [m, c] : counts_)
        size_ += c;
}

Polymer::Polymer(const std::vector<MonomerType>& monomers)
    : Polymer([&] {
          std::vector<std::pair<MonomerType, int>> c;
          c.reserve(monomers.size());
          for (const auto& m : monomers)
              c.emplace_back(m, 1);
          return c;
      }())
{
}

int Polymer::count_of(const MonomerType& m) const
{
    auto it = std::lower_bound(counts_.begin(), counts_.end(), m,
                               [](const auto& entry, const MonomerType& key) { return entry.first < key; });
    return it != counts_.end() && it->first == m ? it->second : 0;
}

std::map<std::string, int> Polymer::net_sites() const
{
    std::map<std::string, int> net;
    for (const auto& [m, c] : counts_)
        for (const auto& s : m.sites())
            net[s.name] += s.starred ? -c : c;
    return net;
}

Polymer Polymer::merged_with(const Polymer& other) const
{
    auto all = counts_;
    all.insert(all.end(), other.counts_.begin(), other.counts_.end());
    return Polymer{std::move(all)};
}

std::string Polymer::str() const
{
    std::string out = "{";
    for (const auto& [m, c] : counts_)
        for (int i = 0; i < c; ++i)
            out += " " + m.display_name();
    return out + " }";
}

std::strong_ordering operator<=>(const Polymer& a, const Polymer& b)
{
    const auto& x = a.counts_;
    const auto& y = b.counts_;
    std::size_t i = 0, j = 0;
    int rx = x.empty() ? 0 : x[0].second;
    int ry = y.empty() ? 0 : y[0].second;
    while (i < x.size() && j < y.size()) {
        if (auto c = x[i].first <=> y[j].first; c != 0)
            return c;
        int take = std::min(rx, ry);
        rx -= take;
        ry -= take;
        if (rx == 0 && ++i < x.size())
            rx = x[i].second;
        if (ry == 0 && ++j < y.size())
            ry = y[j].second;
    }
    bool x_done = i >= x.size();
    bool y_done = j >= y.size();
    if (x_done && y_done)
        return std::strong_ordering::equal;
    return x_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

// Tbn -------------------------------------------------------------------------

Tbn::Tbn(const std::vector<std::pair<MonomerType, int>>& entries)
{
    std::map<MonomerType, int> merged;
    for (const auto& [m, c] : entries) {
        if (c < 0)
            throw InvalidArgument("negative count for monomer " + m.display_name());
        merged.try_emplace(m, 0).first->second += c;
    }
    std::set<std::string> names;
    for (const auto& [m, c] : merged) {
        types_.push_back(m);
        counts_.push_back(c);
        total_ += c;
        for (const auto& s : m.sites())
            names.insert(s.name);
    }
    site_names_.assign(names.begin(), names.end());
    net_.assign(types_.size() * site_names_.size(), 0);
    for (std::size_t t = 0; t < types_.size(); ++t)
        for (const auto& s : types_[t].sites()) {
            auto x = std::lower_bound(site_names_.begin(), site_names_.end(), s.name) - site_names_.begin();
            net_[t * site_names_.size() + x] += s.starred ? -1 : 1;
        }
}

std::optional<std::size_t> Tbn::index_of(const MonomerType& m) const
{
    auto it = std::lower_bound(types_.begin(), types_.end(), m);
    if (it == types_.end() || !(*it == m))
        return std::nullopt;
    return static_cast<std::size_t>(it - types_.begin());
}

std::optional<std::size_t> Tbn::index_of_label(std::string_view label) const
{
    for (std::size_t t = 0; t < types_.size(); ++t)
        if (types_[t].label() && *types_[t].label() == label)
            return t;
    return std::nullopt;
}

int Tbn::count_of(const MonomerType& m) const
{
    auto i = index_of(m);
    return i ? counts_[*i] : 0;
}

std::span<const int> Tbn::net(std::size_t type) const
{
    return std::span<const int>{net_}.subspan(type * site_names_.size(), site_names_.size());
}

std::vector<std::string> Tbn::non_limiting_sites() const
{
    std::vector<long long> total(site_names_.size(), 0);
    for (std::size_t t = 0; t < types_.size(); ++t) {
        auto row = net(t);
        for (std::size_t x = 0; x < row.size(); ++x)
            total[x] += static_cast<long long>(row[x]) * counts_[t];
    }
    std::vector<std::string> out;
    for (std::size_t x = 0; x < total.size(); ++x)
        if (total[x] < 0)
            out.push_back(site_names_[x]);
    return out;
}

bool Tbn::is_star_limiting() const
{
    return non_limiting_sites().empty();
}

Tbn Tbn::with_added(const MonomerType& m, int copies) const
{
    std::vector<std::pair<MonomerType, int>> entries;
    for (std::size_t t = 0; t < types_.size(); ++t)
        entries.emplace_back(types_[t], counts_[t]);
    entries.emplace_back(m, copies);
    return Tbn{entries};
}

Polymer Tbn::polymer_from_counts(std::span<const int> counts) const
{
    if (counts.size() != types_.size())
        throw InvalidArgument("count vector length does not match the TBN");
    std::vector<std::pair<MonomerType, int>> entries;
    for (std::size_t t = 0; t < counts.size(); ++t)
        if (counts[t] > 0)
            entries.emplace_back(types_[t], counts[t]);
    return Polymer{std::move(entries)};
}

std::vector<int> Tbn::counts_in(const Polymer& p) const
{
    std::vector<int> out(types_.size(), 0);
    for (const auto& [m, c] : p.monomers()) {
        auto i = index_of(m);
        if (!i)
            throw InvalidArgument("polymer uses monomer " + m.display_name() + " which is not in the TBN");
        out[*i] = c;
    }
    return out;
}

// Configuration -----------------------------------------------------------------

Configuration::Configuration(std::shared_ptr<const Tbn> tbn, std::map<Polymer, int> polymers) : tbn_{std::move(tbn)}
{
    if (!tbn_)
        throw InvalidArgument("configuration requires a TBN");
    std::vector<int> used(tbn_->type_count(), 0);
    for (auto& [p, c] : polymers) {
        if (c < 0)
            throw InvalidArgument("negative polymer count");
        if (c == 0)
            continue;
        auto v = tbn_->counts_in(p);
        for (std::size_t t = 0; t < v.size(); ++t)
            used[t] += v[t] * c;
        polymers_.emplace(p, c);
        count_ += c;
    }
    for (std::size_t t = 0; t < used.size(); ++t)
        if (used[t] != tbn_->counts()[t])
            throw InvalidArgument("configuration does not conserve monomer " + tbn_->types()[t].display_name() + " (uses " +
                                  std::to_string(used[t]) + ", TBN has " + std::to_string(tbn_->counts()[t]) + ")");
}

Configuration::Configuration(std::shared_ptr<const Tbn> tbn, const std::vector<Polymer>& polymers)
    : Configuration(std::move(tbn), [&] {
          std::map<Polymer, int> m;
          for (const auto& p : polymers)
              ++m[p];
          return m;
      }())
{
}

int Configuration::largest_polymer() const
{
    int best = 0;
    for (const auto& [p, c] : polymers_)
        best = std::max(best, p.size());
    return best;
}

// Predicates --------------------------------------------------------------------

bool is_covered(const Polymer& polymer, const SiteType& site)
{
    if (site.starred)
        throw InvalidArgument("is_covered expects an unstarred site, got " + site.str());
    int unstarred = 0, starred = 0;
    for (const auto& [m, c] : polymer.monomers())
        for (const auto& s : m.sites())
            if (s.name == site.name)
                (s.starred ? starred : unstarred) += c;
    return starred <= unstarred;
}

bool is_self_saturated(const Polymer& polymer)
{
    auto net = polymer.net_sites();
    return std::all_of(net.begin(), net.end(), [](const auto& kv) { return kv.second >= 0; });
}

bool is_saturated(const Configuration& config)
{
    return std::all_of(config.polymers().begin(), config.polymers().end(),
                       [](const auto& kv) { return is_self_saturated(kv.first); });
}

Configuration melt(std::shared_ptr<const Tbn> tbn)
{
    std::map<Polymer, int> polymers;
    for (std::size_t t = 0; t < tbn->type_count(); ++t)
        if (tbn->counts()[t] > 0)
            polymers.emplace(Polymer{std::vector<MonomerType>{tbn->types()[t]}}, tbn->counts()[t]);
    return Configuration{std::move(tbn), std::move(polymers)};
}

Configuration melt(const Tbn& tbn)
{
    return melt(std::make_shared<const Tbn>(tbn));
}

int merginess(const Configuration& config)
{
    return config.tbn().total_monomers() - config.polymer_count();
}

int starriness(const Configuration& config)
{
    int s = 0;
    for (const auto& [p, c] : config.polymers())
        if (!is_self_saturated(p))
            s += c;
    return s;
}

int distance_to_stability(const Configuration& config, int optimum)
{
    if (!is_saturated(config))
        throw InvalidArgument("distance to stability is only defined for saturated configurations");
    int d = optimum - config.polymer_count();
    if (d < 0)
        throw InvalidArgument("saturated configuration has more polymers than the claimed optimum " +
                              std::to_string(optimum));
    return d;
}

int config_distance(const Configuration& alpha, const Configuration& beta)
{
    int d = 0;
    auto a = alpha.polymers().begin(), ae = alpha.polymers().end();
    auto b = beta.polymers().begin(), be = beta.polymers().end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            d += a->second;
            ++a;
        } else if (a == ae || b->first < a->first) {
            d += b->second;
            ++b;
        } else {
            d += std::abs(a->second - b->second);
            ++a;
            ++b;
        }
    }
    return d;
}

bool splits_to(const Configuration& alpha, const Configuration& beta)
{
    std::map<MonomerType, int> index;
    for (const auto* cfg : {&alpha, &beta})
        for (const auto& [p, c] : cfg->polymers())
            for (const auto& [m, k] : p.monomers())
                index.try_emplace(m, 0);
    int next = 0;
    for (auto& [m, i] : index)
        i = next++;
    auto to_parts = [&](const Configuration& cfg) {
        std::vector<detail::Counts> parts;
        for (const auto& [p, c] : cfg.polymers()) {
            detail::Counts v(index.size(), 0);
            for (const auto& [m, k] : p.monomers())
                v[index.at(m)] = k;
            for (int i = 0; i < c; ++i)
                parts.push_back(v);
        }
        return parts;
    };
    return detail::splits_to_counts(to_parts(alpha), to_parts(beta));
}

std::optional<std::vector<Polymer>> feed_forward_order(const Configuration& config)
{
    std::vector<const Polymer*> nodes;
    std::vector<std::map<std::string, int>> nets;
    for (const auto& [p, c] : config.polymers()) {
        nodes.push_back(&p);
        nets.push_back(p.net_sites());
    }
    const std::size_t n = nodes.size();
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<int> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            bool edge = std::any_of(nets[i].begin(), nets[i].end(), [&](const auto& kv) {
                if (kv.second <= 0)
                    return false;
                auto it = nets[j].find(kv.first);
                return it != nets[j].end() && it->second < 0;
            });
            if (edge) {
                out[i].push_back(j);
                ++indegree[j];
            }
        }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0)
            ready.push(i);
    std::vector<Polymer> order;
    std::size_t visited = 0;
    while (!ready.empty()) {
        auto i = ready.top();
        ready.pop();
        ++visited;
        for (int c = 0; c < config.polymers().at(*nodes[i]); ++c)
            order.push_back(*nodes[i]);
        for (auto j : out[i])
            if (--indegree[j] == 0)
                ready.push(j);
    }
    if (visited != n)
        return std::nullopt;
    return order;
}

bool is_feed_forward(const Tbn& tbn)
{
    return feed_forward_order(melt(tbn)).has_value();
}

PolarityNormalization normalize_polarity(const Tbn& tbn)
{
    auto flipped = tbn.non_limiting_sites();
    std::set<std::string> flip{flipped.begin(), flipped.end()};
    std::vector<std::pair<MonomerType, int>> entries;
    for (std::size_t t = 0; t < tbn.type_count(); ++t) {
        const auto& m = tbn.types()[t];
        std::vector<SiteType> sites = m.sites();
        for (auto& s : sites)
            if (flip.count(s.name) != 0)
                s.starred = !s.starred;
        entries.emplace_back(MonomerType{std::move(sites), m.label()}, tbn.counts()[t]);
    }
    return {Tbn{entries}, std::move(flipped)};
}

void require_star_limiting(const Tbn& tbn)
{
    auto bad = tbn.non_limiting_sites();
    if (bad.empty())
        return;
    std::string names;
    for (const auto& b : bad)
        names += (names.empty() ? "" : ", ") + b;
    throw NotStarLimiting("TBN is not star-limiting for site(s): " + names);
}

// Index-based helpers -----------------------------------------------------------

namespace detail {

std::vector<int> net_of(const Tbn& tbn, std::span<const int> counts)
{
    std::vector<int> net(tbn.site_names().size(), 0);
    for (std::size_t t = 0; t < counts.size(); ++t) {
        if (counts[t] == 0)
            continue;
        auto row = tbn.net(t);
        for (std::size_t x = 0; x < row.size(); ++x)
            net[x] += row[x] * counts[t];
    }
    return net;
}

bool self_saturated(const Tbn& tbn, std::span<const int> counts)
{
    auto net = net_of(tbn, counts);
    return std::all_of(net.begin(), net.end(), [](int v) { return v >= 0; });
}

std::size_t CountsHash::operator()(const Counts& v) const noexcept
{
    std::size_t h = v.size();
    for (int x : v)
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

namespace {

class SplitSearch
{
public:
    SplitSearch(std::vector<Counts> alpha, std::vector<Counts> beta_types) : alpha_{std::move(alpha)}, beta_{std::move(beta_types)} {}

    bool solve(std::size_t i, Counts& remaining)
    {
        if (i == alpha_.size())
            return std::all_of(remaining.begin(), remaining.end(), [](int c) { return c == 0; });
        Counts key = remaining;
        key.push_back(static_cast<int>(i));
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        std::vector<std::size_t> candidates;
        for (std::size_t j = 0; j < beta_.size(); ++j)
            if (remaining[j] > 0 && fits(beta_[j], alpha_[i]))
                candidates.push_back(j);
        Counts residual = alpha_[i];
        int residual_total = std::accumulate(residual.begin(), residual.end(), 0);
        bool ok = fill(i, candidates, 0, residual, residual_total, remaining);
        memo_.emplace(std::move(key), ok);
        return ok;
    }

private:
    static bool fits(const Counts& part, const Counts& whole)
    {
        for (std::size_t t = 0; t < part.size(); ++t)
            if (part[t] > whole[t])
                return false;
        return true;
    }

    bool fill(std::size_t i, const std::vector<std::size_t>& candidates, std::size_t c, Counts& residual, int residual_total,
              Counts& remaining)
    {
        if (residual_total == 0)
            return solve(i + 1, remaining);
        if (c == candidates.size())
            return false;
        const auto j = candidates[c];
        const auto& part = beta_[j];
        int size = std::accumulate(part.begin(), part.end(), 0);
        int most = remaining[j];
        for (std::size_t t = 0; t < part.size(); ++t)
            if (part[t] > 0)
                most = std::min(most, residual[t] / part[t]);
        for (int k = most; k >= 0; --k) {
            for (std::size_t t = 0; t < part.size(); ++t)
                residual[t] -= k * part[t];
            remaining[j] -= k;
            bool ok = fill(i, candidates, c + 1, residual, residual_total - k * size, remaining);
            remaining[j] += k;
            for (std::size_t t = 0; t < part.size(); ++t)
                residual[t] += k * part[t];
            if (ok)
                return true;
        }
        return false;
    }

    std::vector<Counts> alpha_;
    std::vector<Counts> beta_;
    std::unordered_map<Counts, bool, CountsHash> memo_;
};

} // namespace

bool splits_to_counts(const std::vector<Counts>& alpha, const std::vector<Counts>& beta)
{
    std::size_t width = !alpha.empty() ? alpha.front().size() : (!beta.empty() ? beta.front().size() : 0);
    Counts total_a(width, 0), total_b(width, 0);
    for (const auto& p : alpha)
        for (std::size_t t = 0; t < width; ++t)
            total_a[t] += p[t];
    for (const auto& p : beta)
        for (std::size_t t = 0; t < width; ++t)
            total_b[t] += p[t];
    if (total_a != total_b)
        throw InvalidArgument("splits_to requires configurations over the same monomers");

    std::map<Counts, int> beta_types;
    for (const auto& p : beta)
        ++beta_types[p];
    std::vector<Counts> types;
    Counts remaining;
    for (const auto& [p, c] : beta_types) {
        types.push_back(p);
        remaining.push_back(c);
    }
    auto sorted_alpha = alpha;
    auto size = [](const Counts& v) { return std::accumulate(v.begin(), v.end(), 0); };
    std::sort(sorted_alpha.begin(), sorted_alpha.end(), [&](const Counts& a, const Counts& b) {
        int sa = size(a), sb = size(b);
        return sa != sb ? sa > sb : a < b;
    });
    SplitSearch search{std::move(sorted_alpha), std::move(types)};
    return search.solve(0, remaining);
}

} // namespace detail

} // namespace tbn

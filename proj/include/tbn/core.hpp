#pragma once

// Domain model for thermodynamic binding networks: sites, monomers, TBNs,
// polymers and configurations, together with the predicates and metrics
// defined over them (saturation, merginess, starriness, splitting, feed-forward
// ordering and configuration distance).

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tbn {

/// True iff `s` may be used as a site name. Labels follow the same rule but may contain `*`.
bool is_identifier(std::string_view s);

struct SiteType
{
    std::string name;
    bool starred = false;

    SiteType() = default;
    SiteType(std::string name, bool starred = false);

    /// Parses `a` or `a*`.
    static SiteType parse(std::string_view token);

    [[nodiscard]] SiteType complement() const { return SiteType{name, !starred}; }
    [[nodiscard]] SiteType unstarred() const { return SiteType{name, false}; }
    [[nodiscard]] std::string str() const { return starred ? name + "*" : name; }

    friend bool operator==(const SiteType&, const SiteType&) = default;
    friend std::strong_ordering operator<=>(const SiteType&, const SiteType&) = default;
};

/// A multiset of site types. Equality and ordering ignore the label.
class MonomerType
{
public:
    explicit MonomerType(std::vector<SiteType> sites, std::optional<std::string> label = std::nullopt);

    /// Sorted, with repetition.
    [[nodiscard]] const std::vector<SiteType>& sites() const { return data_->sites; }
    [[nodiscard]] const std::optional<std::string>& label() const { return data_->label; }
    [[nodiscard]] std::size_t total_sites() const { return data_->sites.size(); }
    [[nodiscard]] bool has_starred() const;

    /// Space separated site tokens, e.g. `a a b*`.
    [[nodiscard]] std::string site_string() const;
    /// The label when present, otherwise `(a a b*)`.
    [[nodiscard]] std::string display_name() const;

    [[nodiscard]] MonomerType with_label(std::optional<std::string> label) const;

    friend bool operator==(const MonomerType& a, const MonomerType& b) { return a.sites() == b.sites(); }
    friend std::strong_ordering operator<=>(const MonomerType& a, const MonomerType& b)
    {
        return a.sites() <=> b.sites();
    }

private:
    struct Data
    {
        std::vector<SiteType> sites;
        std::optional<std::string> label;
    };
    std::shared_ptr<const Data> data_;
};

/// A non-empty multiset of monomer types in canonical (sorted) order.
class Polymer
{
public:
    explicit Polymer(std::vector<std::pair<MonomerType, int>> counts);
    explicit Polymer(const std::vector<MonomerType>& monomers);

    [[nodiscard]] const std::vector<std::pair<MonomerType, int>>& monomers() const { return counts_; }
    [[nodiscard]] int size() const { return size_; }
    [[nodiscard]] int count_of(const MonomerType& m) const;

    /// Unstarred minus starred copies per site name.
    [[nodiscard]] std::map<std::string, int> net_sites() const;

    [[nodiscard]] Polymer merged_with(const Polymer& other) const;

    /// `{ x x y }` using monomer display names.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Polymer& a, const Polymer& b) { return a.counts_ == b.counts_; }
    /// Lexicographic on the sorted monomer list, expanded with repetition.
    friend std::strong_ordering operator<=>(const Polymer& a, const Polymer& b);

private:
    std::vector<std::pair<MonomerType, int>> counts_;
    int size_ = 0;
};

/// A multiset of monomer types. Counts may be zero so that a TBN can refer
/// to a monomer type it does not currently contain.
class Tbn
{
public:
    Tbn() = default;
    /// Duplicate monomer types accumulate counts; the first label seen wins.
    explicit Tbn(const std::vector<std::pair<MonomerType, int>>& entries);

    [[nodiscard]] const std::vector<MonomerType>& types() const { return types_; }
    [[nodiscard]] std::span<const int> counts() const { return counts_; }
    [[nodiscard]] std::size_t type_count() const { return types_.size(); }
    [[nodiscard]] int count_of(const MonomerType& m) const;
    [[nodiscard]] std::optional<std::size_t> index_of(const MonomerType& m) const;
    [[nodiscard]] std::optional<std::size_t> index_of_label(std::string_view label) const;
    [[nodiscard]] int total_monomers() const { return total_; }
    [[nodiscard]] bool empty() const { return total_ == 0; }

    /// Sorted distinct site names (a and a* share a name).
    [[nodiscard]] const std::vector<std::string>& site_names() const { return site_names_; }
    /// Per site name (indexed like site_names()), unstarred minus starred copies on one monomer of `type`.
    [[nodiscard]] std::span<const int> net(std::size_t type) const;

    /// For every site name, total unstarred copies are at least total starred copies.
    [[nodiscard]] bool is_star_limiting() const;
    /// Site names whose starred copies outnumber unstarred ones.
    [[nodiscard]] std::vector<std::string> non_limiting_sites() const;

    [[nodiscard]] Tbn with_added(const MonomerType& m, int copies = 1) const;

    [[nodiscard]] Polymer polymer_from_counts(std::span<const int> counts) const;
    /// Per-type counts of `p`; throws InvalidArgument if `p` uses a foreign monomer type.
    [[nodiscard]] std::vector<int> counts_in(const Polymer& p) const;

    friend bool operator==(const Tbn& a, const Tbn& b) { return a.types_ == b.types_ && a.counts_ == b.counts_; }

private:
    std::vector<MonomerType> types_;
    std::vector<int> counts_;
    int total_ = 0;
    std::vector<std::string> site_names_;
    std::vector<int> net_; // types_.size() x site_names_.size(), row major
};

/// A partition of a TBN's monomers into polymers.
class Configuration
{
public:
    /// Throws InvalidArgument unless the polymers use exactly the TBN's monomers.
    Configuration(std::shared_ptr<const Tbn> tbn, std::map<Polymer, int> polymers);
    Configuration(std::shared_ptr<const Tbn> tbn, const std::vector<Polymer>& polymers);

    [[nodiscard]] const Tbn& tbn() const { return *tbn_; }
    [[nodiscard]] const std::shared_ptr<const Tbn>& tbn_ptr() const { return tbn_; }
    [[nodiscard]] const std::map<Polymer, int>& polymers() const { return polymers_; }
    [[nodiscard]] int polymer_count() const { return count_; }
    [[nodiscard]] int largest_polymer() const;

    friend bool operator==(const Configuration& a, const Configuration& b) { return a.polymers_ == b.polymers_; }
    friend bool operator<(const Configuration& a, const Configuration& b) { return a.polymers_ < b.polymers_; }

private:
    std::shared_ptr<const Tbn> tbn_;
    std::map<Polymer, int> polymers_;
    int count_ = 0;
};

// Predicates and metrics -------------------------------------------------

/// `site` must be unstarred. False iff the polymer holds more starred than unstarred copies.
bool is_covered(const Polymer& polymer, const SiteType& site);
bool is_self_saturated(const Polymer& polymer);
bool is_saturated(const Configuration& config);

Configuration melt(std::shared_ptr<const Tbn> tbn);
Configuration melt(const Tbn& tbn);

/// Monomers of the owning TBN minus polymers.
int merginess(const Configuration& config);
/// Polymers (with multiplicity) that have an uncovered site.
int starriness(const Configuration& config);

/// True iff `beta` is reachable from `alpha` by splitting polymers only.
bool splits_to(const Configuration& alpha, const Configuration& beta);

/// `optimum - polymer_count`. Throws unless `config` is saturated.
int distance_to_stability(const Configuration& config, int optimum);

/// L1 distance between polymer count vectors; polymers are compared by monomer content.
int config_distance(const Configuration& alpha, const Configuration& beta);

/// Topological order of the binding digraph (edge from excess unstarred to
/// matching excess starred), or nullopt when the digraph has a cycle.
std::optional<std::vector<Polymer>> feed_forward_order(const Configuration& config);
bool is_feed_forward(const Tbn& tbn);

struct PolarityNormalization
{
    Tbn tbn;
    std::vector<std::string> flipped_sites;
};

/// Swaps star on every site name whose starred copies outnumber unstarred ones.
PolarityNormalization normalize_polarity(const Tbn& tbn);

/// Throws NotStarLimiting naming the offending sites.
void require_star_limiting(const Tbn& tbn);

namespace detail {

using Counts = std::vector<int>;

struct CountsHash
{
    std::size_t operator()(const Counts& v) const noexcept;
};

/// Net site vector of a polymer given as per-type counts of `tbn`.
std::vector<int> net_of(const Tbn& tbn, std::span<const int> counts);
bool self_saturated(const Tbn& tbn, std::span<const int> counts);

/// Can the parts of `beta` be grouped so that each group sums to one part of `alpha`?
/// Parts are per-type count vectors of equal length.
bool splits_to_counts(const std::vector<Counts>& alpha, const std::vector<Counts>& beta);

} // namespace detail

} // namespace tbn

#pragma once

// Stable configurations as optima of the polymer-basis integer program:
// maximise the number of polymers subject to monomer conservation.

#include "tbn/basis.hpp"
#include "tbn/budget.hpp"
#include "tbn/core.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tbn {

enum class Certificate { ip_exact, feed_forward_merge_bound, brute_force };

std::string certificate_name(Certificate c);

struct SolveOptions
{
    std::size_t optima_cap = 10'000;
    Budget budget;
    bool compute_lex = true;
    /// Permutation of the basis; empty means flip-constrained polymers first, then canonical order.
    std::vector<Polymer> lex_ordering;
};

struct StableReport
{
    int optimum = 0;
    /// Set when the basis was incomplete and no certificate proves the optimum.
    bool optimum_is_lower_bound = false;
    bool basis_complete = true;
    std::vector<Configuration> all_optima; // canonical order
    bool optima_truncated = false;
    std::optional<Configuration> lex_earliest;
    Certificate certificate = Certificate::ip_exact;

    /// All optimal configurations are listed.
    [[nodiscard]] bool optima_complete() const { return basis_complete && !optima_truncated; }
    /// Known only when the optima are complete.
    [[nodiscard]] std::optional<bool> unique() const
    {
        if (!optima_complete())
            return std::nullopt;
        return all_optima.size() == 1;
    }
};

/// Polymers of `basis` that use monomer types absent from `tbn` are ignored.
/// `flip_bounds` caps the count of the listed polymers.
StableReport solve_stable(const std::shared_ptr<const Tbn>& tbn, const PolymerBasis& basis,
                          const std::map<Polymer, int>& flip_bounds = {}, const SolveOptions& options = {});

/// Enumerates the basis with `size_cap` (default_size_cap when unset), then solves.
StableReport solve_stable(const std::shared_ptr<const Tbn>& tbn, std::optional<int> size_cap = std::nullopt,
                          const SolveOptions& options = {});

std::vector<Polymer> default_lex_ordering(const PolymerBasis& basis, const std::map<Polymer, int>& flip_bounds = {});

/// Minimises the count of each polymer of `ordering` in turn among stable configurations.
Configuration lex_earliest(const std::shared_ptr<const Tbn>& tbn, const PolymerBasis& basis,
                           const std::vector<Polymer>& ordering, const std::map<Polymer, int>& flip_bounds = {},
                           const Budget& budget = {});

/// True when `a` precedes `b`: at the first polymer (canonical order) whose counts differ, `a` has fewer.
bool lex_precedes(const Configuration& a, const Configuration& b);

/// Exhaustive search over every partition of the monomers.
StableReport brute_force_stable(const std::shared_ptr<const Tbn>& tbn, int max_monomers = 12,
                                std::size_t optima_cap = 10'000);

/// True iff `config` is saturated and merginess(config) = starriness(melt(T)).
/// Throws InvalidArgument unless the owning TBN is feed-forward.
bool certify_stable_feed_forward(const Configuration& config);

/// Visits every partition of the multiset with the given multiplicities once
/// (Knuth, TAOCP 7.2.1.5, Algorithm M). Each part is a multiplicity vector.
/// The visitor returns false to stop early.
void for_each_multiset_partition(std::span<const int> multiplicities,
                                 const std::function<bool(const std::vector<std::vector<int>>&)>& visit);

} // namespace tbn

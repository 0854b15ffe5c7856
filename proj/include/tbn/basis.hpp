#pragma once

// Polymer basis B(T): the self-saturated polymers of a TBN that cannot be
// split into two self-saturated parts. Stable configurations only use
// basis polymers.

#include "tbn/budget.hpp"
#include "tbn/core.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tbn {

struct PolymerBasis
{
    std::vector<Polymer> polymers; // canonical order
    int size_cap_used = 0;
    /// The cap reached every polymer the TBN can form, so no member is missing.
    bool complete = false;
};

/// min(polymer_size_bound, 20).
int default_size_cap(const Tbn& tbn);

/// Cap at which enumeration is exhaustive: min(polymer_size_bound, total monomers).
int exhaustive_size_cap(const Tbn& tbn);

/// Members use at most T(m) copies of each monomer type m and at most
/// `size_cap` monomers (default_size_cap when unset).
PolymerBasis enumerate_basis(const Tbn& tbn, std::optional<int> size_cap = std::nullopt, const Budget& budget = {});

/// True iff the self-saturated polymer cannot be split into two self-saturated parts.
bool is_irreducible(const Polymer& polymer, const Budget& budget = {});

struct MergedBasis
{
    PolymerBasis basis;          // B(T) ∪ B(T')
    std::vector<Polymer> only_t; // members of B(T) \ B(T')
    std::vector<Polymer> only_t_prime;
    /// Upper bound |a| on polymers in exactly one basis that involve a site starred on the added monomer.
    std::map<Polymer, int> flip_constrained;
    MonomerType added;
};

/// `t_prime` must equal `t` plus one copy of a single monomer.
MergedBasis merged_basis(const Tbn& t, const Tbn& t_prime, std::optional<int> size_cap = std::nullopt,
                         const Budget& budget = {});

} // namespace tbn

#pragma once

// Entropy gap, distance between TBNs, and the end-to-end check of the
// amplifier construction.

#include "tbn/bounds.hpp"
#include "tbn/budget.hpp"
#include "tbn/core.hpp"
#include "tbn/solver.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tbn {

struct InfiniteGap
{
    friend bool operator==(InfiniteGap, InfiniteGap) { return true; }
};

using GapValue = std::variant<int, InfiniteGap>;

std::string gap_string(const GapValue& gap);

struct EntropyGapReport
{
    /// When not exhaustive this is an upper bound, or infinite if no witness was seen.
    GapValue gap = InfiniteGap{};
    /// Saturated, not stable, does not split to a stable configuration, at distance `gap`.
    std::optional<Configuration> witness;
    bool exhaustive = true;
    /// Every saturated configuration that is not stable and does not split to a stable one
    /// has distance to stability at least this.
    int lower_bound = 1;
    std::uint64_t configurations_examined = 0;
};

/// `report` must list every stable configuration of `tbn`.
EntropyGapReport entropy_gap(const std::shared_ptr<const Tbn>& tbn, const StableReport& report,
                             const Budget& budget = Budget{50'000'000});

/// Calls `visit` once per saturated configuration (as polymer count vectors
/// over the TBN's types) until it returns false. Throws BudgetExceeded.
void for_each_saturated_configuration(const Tbn& tbn, const Budget& budget,
                                      const std::function<bool(const std::vector<detail::Counts>&)>& visit);

/// Minimum configuration distance between stable configurations of the two TBNs.
int tbn_distance(const StableReport& t, const StableReport& t_prime);

enum class CheckStatus { passed, failed, partial, skipped };

std::string status_name(CheckStatus s);

struct CheckResult
{
    std::string name;
    CheckStatus status = CheckStatus::passed;
    std::string detail;
};

struct VerifyOptions
{
    bool translators = false;
    Budget budget{20'000'000};
};

struct VerifyReport
{
    int n = 0;
    int k = 0;
    bool translators = false;
    int monomers = 0;
    int analyte_monomers = 0;
    int reference_polymers = 0;
    int analyte_reference_polymers = 0;
    int distance = 0; // between the two reference configurations
    std::vector<CheckResult> checks;

    [[nodiscard]] bool ok() const;
};

/// Builds the amplifier pair (or its translator variant) and checks the
/// claimed properties. Checks that exceed the budget are reported as
/// skipped or partial instead of failing.
VerifyReport verify_amplifier(int n, int k, const VerifyOptions& options = {});

} // namespace tbn

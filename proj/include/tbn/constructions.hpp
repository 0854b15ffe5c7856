#pragma once

// Amplifier families T_{n,k}, T^a_{n,k} and their translator variants, their
// reference configurations, and the small worked examples.

#include "tbn/core.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace tbn {

enum class Family { plain, analyte, translator, translator_analyte };

Family parse_family(std::string_view name);
std::string family_name(Family f);

struct AmplifierSpec
{
    int n = 1;
    int k = 2;
    bool with_analyte = false;
    bool with_translators = false;

    static AmplifierSpec of(Family f, int n, int k);
    /// Throws InvalidArgument unless n >= 1 and k >= 2.
    void validate() const;
};

/// `d_i_j_l`, or `d_i_j_l_p` for the primed triple.
std::string domain_name(int i, int j, int l, bool primed);

std::shared_ptr<const Tbn> build_amplifier(const AmplifierSpec& spec);

/// The expected stable configuration of build_amplifier(spec).
Configuration reference_configuration(const AmplifierSpec& spec);

struct WorkedExample
{
    std::shared_ptr<const Tbn> tbn;
    std::vector<Configuration> configurations;
};

/// `four_monomers` (melt, a saturated 2-polymer configuration, the stable 3-polymer one),
/// `feed_forward` (melt, then a merge that breaks the order) and
/// `non_feed_forward` (melt, merged pair).
std::map<std::string, WorkedExample> worked_examples();

} // namespace tbn

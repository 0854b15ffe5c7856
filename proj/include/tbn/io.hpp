#pragma once

// Plain-text formats for TBNs and configurations, and report serialization.
//
// TBN files hold one monomer per line:
//
//     # comment
//     2 * x: a b*
//     y: a* a*
//     c d
//
// The `COUNT *` prefix defaults to 1 and the `LABEL:` prefix is optional.
// Configuration files hold one polymer per line, `COUNT * { REF REF ... }`,
// where a REF is a monomer label or a parenthesised site list such as `(a b*)`.

#include "tbn/analysis.hpp"
#include "tbn/basis.hpp"
#include "tbn/core.hpp"
#include "tbn/solver.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tbn {

struct MonomerLine
{
    int count = 1;
    std::optional<std::string> label;
    std::vector<SiteType> sites;

    friend bool operator==(const MonomerLine&, const MonomerLine&) = default;
};

struct TbnDocument
{
    std::vector<MonomerLine> monomers;
    std::string source = "<inline>";

    [[nodiscard]] std::shared_ptr<const Tbn> to_tbn() const;
    /// One line per monomer type, in the TBN's canonical type order.
    static TbnDocument from_tbn(const Tbn& tbn);
};

struct ParsedTbn
{
    std::shared_ptr<const Tbn> tbn;
    TbnDocument document;
    std::vector<std::string> warnings;
};

/// Throws ParseError with line and column on malformed input.
TbnDocument parse_tbn_document(std::string_view text, std::string source = "<inline>");
/// Parses and builds the TBN; a TBN that is not star-limiting only produces a warning.
ParsedTbn parse_tbn(std::string_view text, std::string source = "<inline>");
ParsedTbn read_tbn_file(const std::string& path);

std::string serialize_tbn(const TbnDocument& doc);
std::string serialize_tbn(const Tbn& tbn);

/// Polymers must use monomer types of `tbn`, and their counts must add up to the TBN's.
Configuration parse_configuration(const std::shared_ptr<const Tbn>& tbn, std::string_view text);
Configuration read_configuration_file(const std::shared_ptr<const Tbn>& tbn, const std::string& path);
/// One line per distinct polymer, in canonical order.
std::string serialize_configuration(const Configuration& config);

enum class ReportFormat { json, text };

struct StableReportOptions
{
    bool all_optima = true; // otherwise only the first optimum is listed
    bool lex = true;
};

std::string serialize_report(const StableReport& report, ReportFormat format, const StableReportOptions& options = {});
std::string serialize_report(const EntropyGapReport& report, ReportFormat format);
std::string serialize_report(const VerifyReport& report, ReportFormat format);
std::string serialize_report(const PolymerBasis& basis, ReportFormat format);

} // namespace tbn

#include "report_json.hpp"

#include "tbn/errors.hpp"

namespace tbn {

namespace detail {

Json polymer_json(const Polymer& polymer, int count)
{
    Json monomers = Json::array();
    for (const auto& [m, c] : polymer.monomers())
        for (int i = 0; i < c; ++i)
            monomers.push_back(m.display_name());
    return Json{{"count", count}, {"monomers", std::move(monomers)}};
}

Json configuration_json(const Configuration& config)
{
    Json polymers = Json::array();
    for (const auto& [p, c] : config.polymers())
        polymers.push_back(polymer_json(p, c));
    return Json{{"polymer_count", config.polymer_count()}, {"polymers", std::move(polymers)}};
}

Json stable_json(const StableReport& report, const StableReportOptions& options)
{
    Json out;
    out["optimum"] = report.optimum;
    out["optimum_is_lower_bound"] = report.optimum_is_lower_bound;
    out["certificate"] = certificate_name(report.certificate);
    out["basis_complete"] = report.basis_complete;
    out["optima_count"] = report.all_optima.size();
    out["optima_truncated"] = report.optima_truncated;
    if (auto u = report.unique())
        out["unique"] = *u;
    else
        out["unique"] = nullptr;
    Json optima = Json::array();
    for (const auto& c : report.all_optima) {
        optima.push_back(configuration_json(c));
        if (!options.all_optima)
            break;
    }
    out["optima"] = std::move(optima);
    if (options.lex)
        out["lex_earliest"] = report.lex_earliest ? configuration_json(*report.lex_earliest) : Json(nullptr);
    return out;
}

Json gap_json(const EntropyGapReport& report)
{
    Json out;
    if (auto g = std::get_if<int>(&report.gap))
        out["gap"] = *g;
    else
        out["gap"] = "infinite";
    out["exhaustive"] = report.exhaustive;
    out["lower_bound"] = report.lower_bound;
    out["configurations_examined"] = report.configurations_examined;
    out["witness"] = report.witness ? configuration_json(*report.witness) : Json(nullptr);
    return out;
}

Json verify_json(const VerifyReport& report)
{
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(Json{{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
    return Json{{"n", report.n},
                {"k", report.k},
                {"translators", report.translators},
                {"monomers", report.monomers},
                {"analyte_monomers", report.analyte_monomers},
                {"reference_polymers", report.reference_polymers},
                {"analyte_reference_polymers", report.analyte_reference_polymers},
                {"distance", report.distance},
                {"ok", report.ok()},
                {"checks", std::move(checks)}};
}

Json basis_json(const PolymerBasis& basis)
{
    Json polymers = Json::array();
    for (const auto& p : basis.polymers)
        polymers.push_back(polymer_json(p, 1)["monomers"]);
    return Json{{"size", basis.polymers.size()},
                {"size_cap", basis.size_cap_used},
                {"complete", basis.complete},
                {"polymers", std::move(polymers)}};
}

std::string dump(const Json& json)
{
    return json.dump(2) + "\n";
}

} // namespace detail

namespace {

std::string indented(const Configuration& config)
{
    std::string out;
    for (const auto& [p, c] : config.polymers())
        out += "  " + std::to_string(c) + " * " + p.str() + "\n";
    return out;
}

std::string polymers_caption(const Configuration& config)
{
    const int n = config.polymer_count();
    return std::to_string(n) + (n == 1 ? " polymer" : " polymers");
}

} // namespace

std::string serialize_report(const StableReport& report, ReportFormat format, const StableReportOptions& options)
{
    if (format == ReportFormat::json)
        return detail::dump(detail::stable_json(report, options));

    std::string out = "optimum: " + std::to_string(report.optimum) + (report.optimum_is_lower_bound ? " (lower bound)" : "") +
                      "\ncertificate: " + certificate_name(report.certificate) + "\nstable configurations: " +
                      std::to_string(report.all_optima.size()) + (report.optima_truncated ? " (truncated)" : "") + "\n";
    for (std::size_t i = 0; i < report.all_optima.size(); ++i) {
        const auto& c = report.all_optima[i];
        out += "\nstable configuration " + std::to_string(i + 1) + ", " + polymers_caption(c) + ":\n" + indented(c);
        if (!options.all_optima)
            break;
    }
    if (options.lex && report.lex_earliest)
        out += "\nlexicographically earliest, " + polymers_caption(*report.lex_earliest) + ":\n" +
               indented(*report.lex_earliest);
    return out;
}

std::string serialize_report(const EntropyGapReport& report, ReportFormat format)
{
    if (format == ReportFormat::json)
        return detail::dump(detail::gap_json(report));
    std::string out;
    if (report.exhaustive)
        out = "entropy gap: " + gap_string(report.gap) + "\n";
    else
        out = "entropy gap: at least " + std::to_string(report.lower_bound) +
              (report.witness ? ", at most " + gap_string(report.gap) : std::string{}) + " (search incomplete)\n";
    if (report.witness)
        out += "\nwitness, " + polymers_caption(*report.witness) + ":\n" + indented(*report.witness);
    return out;
}

std::string serialize_report(const VerifyReport& report, ReportFormat format)
{
    if (format == ReportFormat::json)
        return detail::dump(detail::verify_json(report));
    std::string out = "amplifier n=" + std::to_string(report.n) + " k=" + std::to_string(report.k) +
                      (report.translators ? " with translators" : "") + "\n";
    out += "monomers: " + std::to_string(report.monomers) + " without analyte, " +
           std::to_string(report.analyte_monomers) + " with\n";
    out += "reference polymers: " + std::to_string(report.reference_polymers) + " without analyte, " +
           std::to_string(report.analyte_reference_polymers) + " with\n";
    out += "distance: " + std::to_string(report.distance) + "\n\n";
    for (const auto& c : report.checks) {
        out += status_name(c.status) + "  " + c.name;
        if (!c.detail.empty())
            out += "  (" + c.detail + ")";
        out += "\n";
    }
    out += report.ok() ? "\nall checks passed or were out of budget\n" : "\nsome checks failed\n";
    return out;
}

std::string serialize_report(const PolymerBasis& basis, ReportFormat format)
{
    if (format == ReportFormat::json)
        return detail::dump(detail::basis_json(basis));
    std::string out = "basis: " + std::to_string(basis.polymers.size()) + " polymers, size cap " +
                      std::to_string(basis.size_cap_used) + (basis.complete ? ", complete" : ", may be incomplete") +
                      "\n";
    for (const auto& p : basis.polymers)
        out += "  " + p.str() + "\n";
    return out;
}

} // namespace tbn

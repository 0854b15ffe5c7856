#include "tbn/cli.hpp"

#include "tbn/analysis.hpp"
#include "tbn/bounds.hpp"
#include "tbn/constructions.hpp"
#include "tbn/errors.hpp"
#include "tbn/io.hpp"

#include "report_json.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace tbn {

namespace {

using detail::Json;

struct Context
{
    std::ostream& out;
    std::ostream& err;
    ReportFormat format = ReportFormat::text;
};

std::shared_ptr<const Tbn> load(Context& ctx, const std::string& path)
{
    auto parsed = read_tbn_file(path);
    for (const auto& w : parsed.warnings)
        ctx.err << "warning: " << w << "\n";
    return parsed.tbn;
}

void emit(Context& ctx, const Json& json, const std::string& text)
{
    ctx.out << (ctx.format == ReportFormat::json ? detail::dump(json) : text);
}

int report_error(Context& ctx, const char* kind, const std::string& message, int code)
{
    if (ctx.format == ReportFormat::json)
        ctx.err << detail::dump(Json{{"error", Json{{"kind", kind}, {"message", message}}}});
    else
        ctx.err << "error: " << message << "\n";
    return code;
}

StableReport solve_exhaustive(const std::shared_ptr<const Tbn>& tbn, std::optional<int> max_size, std::uint64_t budget,
                              bool lex)
{
    SolveOptions options;
    options.budget = Budget{budget};
    options.compute_lex = lex;
    auto basis = enumerate_basis(*tbn, max_size ? max_size : std::optional<int>{exhaustive_size_cap(*tbn)}, options.budget);
    return solve_stable(tbn, basis, {}, options);
}

StableReport solve_all(const std::shared_ptr<const Tbn>& tbn, std::uint64_t budget)
{
    auto report = solve_exhaustive(tbn, std::nullopt, budget, false);
    if (!report.optima_complete())
        throw BudgetExceeded("too many stable configurations to list them all");
    return report;
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Context ctx{out, err};
    CLI::App app{"Thermodynamic binding network toolkit", "tbn"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "tbn 0.1.0");

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    std::string family = "plain";
    int n = 1, k = 2;
    std::string output, reference_out;
    auto* gen = app.add_subcommand("gen", "Generate an amplifier TBN");
    gen->add_option("--family", family, "plain, analyte, translator or translator-analyte")
        ->check(CLI::IsMember({"plain", "analyte", "translator", "translator-analyte"}));
    gen->add_option("-n", n, "Layers")->required();
    gen->add_option("-k", k, "Gap parameter")->required();
    gen->add_option("-o,--output", output, "Write the TBN here instead of standard output");
    gen->add_option("--reference", reference_out, "Also write the reference configuration to this file");

    std::string file, file2, config_file;
    std::optional<int> max_size;
    auto* basis_cmd = app.add_subcommand("basis", "Enumerate the polymer basis");
    basis_cmd->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    basis_cmd->add_option("--max-size", max_size, "Largest polymer size to consider")->check(CLI::PositiveNumber);
    add_format(basis_cmd);

    bool all = false, lex = false;
    auto* solve = app.add_subcommand("solve", "Compute stable configurations");
    solve->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    solve->add_flag("--all", all, "List every stable configuration");
    solve->add_flag("--lex", lex, "Report the lexicographically earliest stable configuration");
    solve->add_option("--max-size", max_size, "Basis size cap (default: exhaustive)")->check(CLI::PositiveNumber);
    add_format(solve);

    auto* gap = app.add_subcommand("gap", "Compute the entropy gap");
    gap->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    add_format(gap);

    auto* distance = app.add_subcommand("distance", "Distance between the stable configurations of two TBNs");
    distance->add_option("FILE1", file)->required()->check(CLI::ExistingFile);
    distance->add_option("FILE2", file2)->required()->check(CLI::ExistingFile);
    add_format(distance);

    bool feed_forward = false, star_limiting = false;
    auto* check = app.add_subcommand("check", "Check a property of a TBN or configuration");
    check->add_option("FILE", file)->required()->check(CLI::ExistingFile);
    auto* which = check->add_option_group("property");
    which->add_flag("--feed-forward", feed_forward, "Is the TBN feed-forward?");
    which->add_option("--saturated", config_file, "Is this configuration saturated?")->check(CLI::ExistingFile);
    which->add_flag("--star-limiting", star_limiting, "Is the TBN star-limiting?");
    which->require_option(1);
    add_format(check);

    bool translators = false;
    auto* verify = app.add_subcommand("verify", "Check the amplifier construction end to end");
    verify->add_option("-n", n, "Layers")->required();
    verify->add_option("-k", k, "Gap parameter")->required();
    verify->add_flag("--translators", translators, "Use the translator variant");
    add_format(verify);

    int bd = 0, bm = 0, ba = 0;
    auto* bound = app.add_subcommand("bound", "Evaluate the closed-form bounds");
    bound->add_option("-n", n, "Size parameter n = max(d, m, a)")->required()->check(CLI::PositiveNumber);
    bound->add_option("-d", bd, "Site names for the polymer size bound (default n)")->check(CLI::PositiveNumber);
    bound->add_option("-m", bm, "Monomer types for the polymer size bound (default n)")->check(CLI::PositiveNumber);
    bound->add_option("-a", ba, "Sites per monomer for the polymer size bound (default n)")->check(CLI::PositiveNumber);
    add_format(bound);

    // Verification runs many searches, so each gets less.
    std::uint64_t basis_budget = 200'000'000, solve_budget = 200'000'000, gap_budget = 50'000'000, distance_budget = 200'000'000,
                  verify_budget = 20'000'000;
    basis_cmd->add_option("--budget", basis_budget, "Search node budget")->check(CLI::PositiveNumber);
    solve->add_option("--budget", solve_budget, "Search node budget")->check(CLI::PositiveNumber);
    gap->add_option("--budget", gap_budget, "Search node budget")->check(CLI::PositiveNumber);
    distance->add_option("--budget", distance_budget, "Search node budget")->check(CLI::PositiveNumber);
    verify->add_option("--budget", verify_budget, "Search node budget per search")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        for (auto* sub : app.get_subcommands())
            out << sub->help();
        if (app.get_subcommands().empty())
            out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        ctx.format = format == "json" ? ReportFormat::json : ReportFormat::text;
        return report_error(ctx, "usage", e.what(), exit_usage);
    }
    ctx.format = format == "json" ? ReportFormat::json : ReportFormat::text;

    try {
        if (gen->parsed()) {
            AmplifierSpec spec = AmplifierSpec::of(parse_family(family), n, k);
            spec.validate();
            auto tbn = build_amplifier(spec);
            auto text = serialize_tbn(*tbn);
            if (output.empty()) {
                out << text;
            } else {
                std::ofstream f{output, std::ios::binary};
                if (!f)
                    throw InvalidArgument("cannot write '" + output + "'");
                f << text;
            }
            if (!reference_out.empty()) {
                std::ofstream f{reference_out, std::ios::binary};
                if (!f)
                    throw InvalidArgument("cannot write '" + reference_out + "'");
                f << serialize_configuration(reference_configuration(spec));
            }
            return exit_ok;
        }

        if (basis_cmd->parsed()) {
            auto tbn = load(ctx, file);
            auto basis = enumerate_basis(*tbn, max_size ? max_size : std::optional<int>{exhaustive_size_cap(*tbn)},
                                         Budget{basis_budget});
            out << serialize_report(basis, ctx.format);
            return exit_ok;
        }

        if (solve->parsed()) {
            auto tbn = load(ctx, file);
            auto report = solve_exhaustive(tbn, max_size, solve_budget, lex);
            out << serialize_report(report, ctx.format, StableReportOptions{all, lex});
            return exit_ok;
        }

        if (gap->parsed()) {
            auto tbn = load(ctx, file);
            auto stable = solve_all(tbn, gap_budget);
            auto report = entropy_gap(tbn, stable, Budget{gap_budget});
            out << serialize_report(report, ctx.format);
            if (!report.exhaustive)
                return report_error(ctx, "budget_exceeded",
                                    "entropy gap search exceeded its budget; the gap is at least " +
                                        std::to_string(report.lower_bound),
                                    exit_budget);
            return exit_ok;
        }

        if (distance->parsed()) {
            auto t = load(ctx, file);
            auto t_prime = load(ctx, file2);
            const int d = tbn_distance(solve_all(t, distance_budget), solve_all(t_prime, distance_budget));
            emit(ctx, Json{{"distance", d}}, "distance: " + std::to_string(d) + "\n");
            return exit_ok;
        }

        if (check->parsed()) {
            auto tbn = load(ctx, file);
            std::string name;
            bool result = false;
            if (feed_forward) {
                name = "feed_forward";
                result = is_feed_forward(*tbn);
            } else if (star_limiting) {
                name = "star_limiting";
                result = tbn->is_star_limiting();
            } else {
                name = "saturated";
                result = is_saturated(read_configuration_file(tbn, config_file));
            }
            emit(ctx, Json{{"check", name}, {"result", result}}, name + ": " + yes_no(result) + "\n");
            return result ? exit_ok : exit_check_failed;
        }

        if (verify->parsed()) {
            VerifyOptions options;
            options.translators = translators;
            options.budget = Budget{verify_budget};
            auto report = verify_amplifier(n, k, options);
            out << serialize_report(report, ctx.format);
            return report.ok() ? exit_ok : exit_check_failed;
        }

        if (bound->parsed()) {
            auto size_stats = TbnStats::make(bd > 0 ? bd : n, bm > 0 ? bm : n, ba > 0 ? ba : n);
            const auto size = polymer_size_bound(size_stats);
            Json json{{"polymer_size_bound", Json{{"d", size_stats.d}, {"m", size_stats.m}, {"a", size_stats.a},
                                                  {"value", size.str()}}}};
            std::string text = "polymer size bound (d=" + std::to_string(size_stats.d) + ", m=" +
                               std::to_string(size_stats.m) + ", a=" + std::to_string(size_stats.a) +
                               "): " + size.str() + "\n";
            if (n >= 2) {
                auto log = upper_bound_log10(TbnStats::make(n, n, n));
                json["distance_bound_log10"] = Json{{"n", n},
                                                    {"value", log.value},
                                                    {"log_form", log.log_form},
                                                    {"inner_exponent", log.inner_exponent.empty()
                                                                           ? Json(nullptr)
                                                                           : Json(log.inner_exponent)},
                                                    {"inner_exponent_digits", log.inner_exponent_digits}};
                text += std::string{"distance bound: "} + (log.log_form ? "log10(log10(bound)) = " : "log10(bound) = ") +
                        std::to_string(log.value) + "\n";
            } else {
                json["distance_bound_log10"] = nullptr;
                text += "distance bound: degenerate for n < 2\n";
            }
            emit(ctx, json, text);
            return exit_ok;
        }
    } catch (const BudgetExceeded& e) {
        return report_error(ctx, "budget_exceeded", e.what(), exit_budget);
    } catch (const ParseError& e) {
        return report_error(ctx, "parse_error", e.what(), exit_usage);
    } catch (const NotStarLimiting& e) {
        return report_error(ctx, "not_star_limiting", e.what(), exit_usage);
    } catch (const InvalidArgument& e) {
        return report_error(ctx, "invalid_argument", e.what(), exit_usage);
    } catch (const Error& e) {
        return report_error(ctx, "internal_error", e.what(), exit_check_failed);
    }
    return exit_usage;
}

} // namespace tbn

#include "tbn/analysis.hpp"
#include "tbn/bounds.hpp"
#include "tbn/cli.hpp"
#include "tbn/constructions.hpp"
#include "tbn/errors.hpp"
#include "tbn/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

namespace {

// The text formats are the interchange between Python and the core: TBNs and
// configurations cross the boundary as strings, reports as JSON strings.

py::tuple run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = tbn::cli_main(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

tbn::ReportFormat format_of(const std::string& name)
{
    if (name == "json")
        return tbn::ReportFormat::json;
    if (name == "text")
        return tbn::ReportFormat::text;
    throw tbn::InvalidArgument("format must be 'json' or 'text'");
}

std::string solve(const std::string& tbn_text, const std::string& format, bool all, bool lex)
{
    auto tbn = tbn::parse_tbn(tbn_text).tbn;
    tbn::SolveOptions options;
    options.compute_lex = lex;
    auto report = tbn::solve_stable(tbn, tbn::exhaustive_size_cap(*tbn), options);
    return tbn::serialize_report(report, format_of(format), {all, lex});
}

std::string entropy_gap(const std::string& tbn_text, const std::string& format, std::uint64_t budget)
{
    auto tbn = tbn::parse_tbn(tbn_text).tbn;
    tbn::SolveOptions options;
    options.compute_lex = false;
    auto stable = tbn::solve_stable(tbn, tbn::exhaustive_size_cap(*tbn), options);
    return tbn::serialize_report(tbn::entropy_gap(tbn, stable, tbn::Budget{budget}), format_of(format));
}

std::string generate(const std::string& family, int n, int k)
{
    auto spec = tbn::AmplifierSpec::of(tbn::parse_family(family), n, k);
    spec.validate();
    return tbn::serialize_tbn(*tbn::build_amplifier(spec));
}

std::string reference(const std::string& family, int n, int k)
{
    auto spec = tbn::AmplifierSpec::of(tbn::parse_family(family), n, k);
    spec.validate();
    return tbn::serialize_configuration(tbn::reference_configuration(spec));
}

std::string verify(int n, int k, bool translators, std::uint64_t budget, const std::string& format)
{
    tbn::VerifyOptions options;
    options.translators = translators;
    options.budget = tbn::Budget{budget};
    return tbn::serialize_report(tbn::verify_amplifier(n, k, options), format_of(format));
}

bool is_saturated(const std::string& tbn_text, const std::string& config_text)
{
    auto tbn = tbn::parse_tbn(tbn_text).tbn;
    return tbn::is_saturated(tbn::parse_configuration(tbn, config_text));
}

std::string normalize(const std::string& tbn_text)
{
    return tbn::serialize_tbn(*tbn::parse_tbn(tbn_text).tbn);
}

std::string polymer_size_bound(int d, int m, int a)
{
    return tbn::polymer_size_bound(tbn::TbnStats::make(d, m, a)).str();
}

double upper_bound_log10(int n)
{
    auto b = tbn::upper_bound_log10(tbn::TbnStats::make(n, n, n));
    if (b.log_form)
        throw tbn::InvalidArgument("bound only available in doubly logarithmic form for this n");
    return b.value;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Core of tbnkit: thermodynamic binding network analysis.";

    auto error = py::register_exception<tbn::Error>(m, "TbnError");
    py::register_exception<tbn::BudgetExceeded>(m, "BudgetExceeded", error.ptr());
    py::register_exception<tbn::ParseError>(m, "ParseError", error.ptr());

    m.def("run_cli", &run_cli, py::arg("args"), "Run the command line; returns (exit code, stdout, stderr).");
    m.def("solve", &solve, py::arg("tbn"), py::arg("format") = "json", py::arg("all") = true, py::arg("lex") = true);
    m.def("entropy_gap", &entropy_gap, py::arg("tbn"), py::arg("format") = "json", py::arg("budget") = 50'000'000);
    m.def("generate", &generate, py::arg("family"), py::arg("n"), py::arg("k"));
    m.def("reference_configuration", &reference, py::arg("family"), py::arg("n"), py::arg("k"));
    m.def("verify", &verify, py::arg("n"), py::arg("k"), py::arg("translators") = false,
          py::arg("budget") = 20'000'000, py::arg("format") = "json");
    m.def("is_saturated", &is_saturated, py::arg("tbn"), py::arg("configuration"));
    m.def("normalize", &normalize, py::arg("tbn"), "Canonical text form of a TBN.");
    m.def("polymer_size_bound", &polymer_size_bound, py::arg("d"), py::arg("m"), py::arg("a"));
    m.def("upper_bound_log10", &upper_bound_log10, py::arg("n"));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "tbn/constructions.hpp"
#include "tbn/errors.hpp"
#include "tbn/io.hpp"

#include <fstream>
#include <sstream>

using namespace tbn;

namespace {

std::string golden(const std::string& name)
{
    std::ifstream in{std::string{TBN_SOURCE_DIR} + "/tests/golden/" + name, std::ios::binary};
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void check_parse_error(const std::string& text, std::size_t line, std::size_t column)
{
    CAPTURE(text);
    try {
        parse_tbn(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() == column);
    }
}

} // namespace

TEST_CASE("parse a small TBN")
{
    auto parsed = parse_tbn("2 * x: a b*\n1 * y: a* a*\n");
    const auto& t = *parsed.tbn;
    REQUIRE(t.type_count() == 2);
    CHECK(t.counts()[*t.index_of_label("x")] == 2);
    CHECK(t.counts()[*t.index_of_label("y")] == 1);
    CHECK(parsed.warnings.size() == 1); // a: 2 unstarred, 2 starred is fine; b has only a star
    CHECK(parsed.warnings[0].find("b") != std::string::npos);
}

TEST_CASE("grammar details")
{
    auto parsed = parse_tbn("# the four-monomer example\n\nm1: a b\nm2: a* b*   # trailing comment\n  m3 : a\nb\n");
    const auto& t = *parsed.tbn;
    CHECK(t.type_count() == 4);
    CHECK(t.total_monomers() == 4);
    CHECK(melt(parsed.tbn).polymer_count() == 4);
    CHECK(parsed.warnings.empty());
    CHECK_FALSE(t.types()[*t.index_of(MonomerType{{SiteType{"b"}}})].label().has_value());

    // duplicate lines accumulate, and the first label is kept
    auto dup = parse_tbn("x: a\n3 * y: a\n").tbn;
    CHECK(dup->type_count() == 1);
    CHECK(dup->total_monomers() == 4);
    CHECK(dup->types()[0].label() == "x");

    // labels may carry a star
    CHECK(parse_tbn("p*: a*\nq: a\n").tbn->index_of_label("p*").has_value());
}

TEST_CASE("syntax errors carry positions")
{
    check_parse_error("x: \n", 1, 4);
    check_parse_error("x: a\ny:\n", 2, 3);
    check_parse_error("x: a b**\n", 1, 6);
    check_parse_error("x y: a\n", 1, 1);
    check_parse_error("x: a:b\n", 1, 4);
    check_parse_error("3 *\n", 1, 4);
    check_parse_error("a (b)\n", 1, 3);
    check_parse_error("99999999999 * a\n", 1, 1);
}

TEST_CASE("serialization round trips")
{
    for (auto f : {Family::plain, Family::analyte, Family::translator, Family::translator_analyte})
        for (int n = 1; n <= 3; ++n)
            for (int k = 2; k <= 4; ++k) {
                auto spec = AmplifierSpec::of(f, n, k);
                auto t = build_amplifier(spec);
                auto text = serialize_tbn(*t);
                auto back = parse_tbn(text);
                CHECK(*back.tbn == *t);
                CHECK(serialize_tbn(*back.tbn) == text);
                for (std::size_t i = 0; i < t->type_count(); ++i)
                    CHECK(back.tbn->types()[i].label() == t->types()[i].label());

                auto sigma = reference_configuration(spec);
                auto config_text = serialize_configuration(sigma);
                CHECK(parse_configuration(back.tbn, config_text) == sigma);
            }

    std::mt19937 rng{1};
    for (int trial = 0; trial < 1000; ++trial) {
        auto t = testing::random_tbn(rng);
        auto text = serialize_tbn(*t);
        auto back = parse_tbn(text).tbn;
        CHECK(*back == *t);
        CHECK(serialize_tbn(*back) == text);
        auto doc = parse_tbn_document(text);
        CHECK(parse_tbn_document(serialize_tbn(doc)).monomers == doc.monomers);
    }
}

TEST_CASE("configuration format")
{
    auto t = parse_tbn("m1: a b\nm2: a* b*\nm3: a\nm4: b\n").tbn;
    auto c = parse_configuration(t, "1 * { m2 m3 m4 }\n{ (a b) }\n");
    CHECK(c.polymer_count() == 2);
    CHECK(is_saturated(c));
    CHECK(serialize_configuration(c) == "1 * { m3 m2 m4 }\n1 * { m1 }\n");

    CHECK_THROWS_AS(parse_configuration(t, "{ m1 m2 }\n"), InvalidArgument); // m3, m4 missing
    CHECK_THROWS_AS(parse_configuration(t, "{ m1 m2 m3 m4 m4 }\n"), InvalidArgument);
    try {
        parse_configuration(t, "{ m1 m2 }\n{ m3 q }\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 6);
    }
    CHECK_THROWS_AS(parse_configuration(t, "{ m1 m2 m3 m4\n"), ParseError);
    CHECK_THROWS_AS(parse_configuration(t, "{ }\n{ m1 m2 m3 m4 }\n"), ParseError);
}

TEST_CASE("report schema")
{
    auto empty = std::make_shared<const Tbn>();
    auto report = solve_stable(empty, std::nullopt);
    auto json = serialize_report(report, ReportFormat::json);
    CHECK(json.find("\"optimum\": 0") != std::string::npos);
    CHECK(json.find("\"polymer_count\": 0") != std::string::npos);

    EntropyGapReport gap;
    CHECK(serialize_report(gap, ReportFormat::json).find("\"gap\": \"infinite\"") != std::string::npos);
}

TEST_CASE("golden files")
{
    auto t = read_tbn_file(std::string{TBN_SOURCE_DIR} + "/tests/golden/four_monomers.tbn").tbn;
    auto report = solve_stable(t, exhaustive_size_cap(*t));
    CHECK(serialize_report(report, ReportFormat::json) == golden("four_monomers_solve.json"));
    CHECK(serialize_report(report, ReportFormat::text) == golden("four_monomers_solve.txt"));
    CHECK(serialize_report(entropy_gap(t, report), ReportFormat::json) == golden("four_monomers_gap.json"));

    CHECK(serialize_tbn(*build_amplifier({1, 2, false, false})) == golden("t_1_2.tbn"));
    CHECK(serialize_configuration(reference_configuration({1, 2, true, false})) == golden("t_1_2_analyte_reference.cfg"));
    CHECK(serialize_report(verify_amplifier(1, 2), ReportFormat::json) == golden("verify_n1_k2.json"));
}

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "residua/catalog.hpp"
#include "residua/dsl.hpp"
#include "residua/errors.hpp"
#include "residua/poly_gf.hpp"
#include "residua/report.hpp"
#include "residua/suites.hpp"

using namespace residua;

TEST(Parser, Examples) {
    const auto q = parse_ring_expr("GF(2)[x]/(x^2)");
    EXPECT_EQ(q.kind, RingExpr::Kind::poly_quot);
    ASSERT_EQ(q.children.size(), 1u);
    EXPECT_EQ(q.children[0].kind, RingExpr::Kind::gf);
    ASSERT_EQ(q.poly.size(), 1u);
    EXPECT_EQ(q.poly[0].exponent, 2u);
    EXPECT_EQ(parse_ring_expr("prod(GF(2),GF(2))").kind, RingExpr::Kind::prod);
    try {
        parse_ring_expr("Z/");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 2u);
        EXPECT_EQ(e.expected(), (std::vector<std::string>{"NAT"}));
    }
}

TEST(Parser, SpansCoverTheSource) {
    const std::string text = "prod(Z/2, GF(3)[x]/(x^2+1))";
    const auto e = parse_ring_expr(text);
    EXPECT_EQ(e.span.begin, 0u);
    EXPECT_EQ(e.span.end, text.size());
    EXPECT_EQ(text.substr(e.children[0].span.begin, e.children[0].span.end - e.children[0].span.begin), "Z/2");
    const auto& quot = e.children[1];
    EXPECT_EQ(text.substr(quot.span.begin, quot.span.end - quot.span.begin), "GF(3)[x]/(x^2+1)");
}

TEST(Parser, RoundTripIsAFixpoint) {
    ASSERT_EQ(fixtures::valid_corpus().size(), 50u);
    for (const auto& text : fixtures::valid_corpus()) {
        const auto first = parse_ring_expr(text);
        const std::string printed = to_string(first);
        const auto second = parse_ring_expr(printed);
        EXPECT_TRUE(same_structure(first, second)) << text;
        EXPECT_EQ(to_string(second), printed) << text;
    }
}

TEST(Parser, MalformedInputsGivePositionedErrors) {
    ASSERT_EQ(fixtures::invalid_corpus().size(), 20u);
    for (const auto& text : fixtures::invalid_corpus()) {
        try {
            parse_ring_expr(text);
            ADD_FAILURE() << "accepted: " << text;
        } catch (const ParseError& e) {
            EXPECT_LE(e.offset(), text.size()) << text;
            EXPECT_FALSE(e.expected().empty()) << text;
        }
    }
}

TEST(Parser, SemanticErrors) {
    EXPECT_THROW(parse_ring_expr("GF(6)"), SemanticError);
    EXPECT_THROW(parse_ring_expr("Z/0"), SemanticError);
    EXPECT_THROW(parse_ring_expr("Z/4[x]/(x)"), SemanticError);
    EXPECT_THROW(parse_ring_expr("GF(2)[x]/(2*x^2+1)"), SemanticError);  // degree collapses to 0
    EXPECT_THROW(parse_ring_expr("GF(4)[x]/(5*x)"), SemanticError);      // 5 is not in GF(4)
    EXPECT_THROW(parse_ring_expr("GF(2)[x]/(x^20)"), SemanticError);     // exceeds the table cap
    EXPECT_THROW(parse_ring_expr("sdp(6,1,zero)"), SemanticError);
    EXPECT_THROW(parse_ring_expr("Z/1234567890123456789012"), SemanticError);
    try {
        parse_ring_expr("prod(Z/2,GF(10))");
        FAIL();
    } catch (const SemanticError& e) {
        EXPECT_EQ(e.span().begin, 9u);
        EXPECT_EQ(e.span().end, 15u);
    }
}

TEST(Evaluate, Examples) {
    const Ring f4 = evaluate("GF(4)");
    EXPECT_EQ(f4.order(), 4u);
    EXPECT_TRUE(is_field(f4));
    EXPECT_TRUE(find_isomorphism(evaluate("sdp(2,1,zero)"), evaluate("GF(2)[x]/(x^2)")).has_value());
    EXPECT_THROW(evaluate("Z/0"), SemanticError);
    EXPECT_EQ(evaluate(" prod( GF(2) , Z/3 ) ").label(), "prod(GF(2),Z/3)");
    EXPECT_EQ(evaluate("sdp(3,2,unital)").order(), 27u);
    EXPECT_TRUE(find_isomorphism(evaluate("GF(4)[x]/(x^2+x+2)"), gf_ring(16)).has_value());
}

TEST(Evaluate, LikeTermsAreCollected) {
    EXPECT_TRUE(evaluate("GF(2)[x]/(x^2+x+x)").same_tables(evaluate("GF(2)[x]/(x^2)")));
    EXPECT_TRUE(evaluate("GF(3)[x]/(x^2+2+2)").same_tables(evaluate("GF(3)[x]/(x^2+1)")));
}

TEST(Catalog, FamiliesAndBounds) {
    CatalogOptions o;
    o.max_order = 16;
    const auto exprs = catalog_expressions(o);
    for (const char* e : {"Z/4", "Z/9", "GF(2)", "GF(16)", "GF(2)[x]/(x^2)", "GF(2)[x]/(x^4+x^2+1)",
                          "GF(4)[x]/(x^2)", "prod(GF(2),GF(2))", "prod(Z/4,GF(3))", "sdp(2,1,zero)",
                          "sdp(2,2,unital)", "sdp(3,1,unital)"})
        EXPECT_NE(std::find(exprs.begin(), exprs.end(), e), exprs.end()) << e;
    EXPECT_EQ(std::find(exprs.begin(), exprs.end(), "Z/2"), exprs.end());
    for (const auto& r : build_catalog(o)) EXPECT_LE(r.order(), 16u) << r.label();
    o.extra_rings = {"Z/6", "Z/4"};
    const auto extended = catalog_expressions(o);
    EXPECT_EQ(extended.back(), "Z/6");
    EXPECT_EQ(extended.size(), exprs.size() + 1);
}

TEST(Report, EmptyReportJson) {
    SuiteReport rep;
    rep.suite = "empty";
    rep.finalize();
    const auto j = nlohmann::json::parse(render_report(rep, ReportFormat::json));
    EXPECT_TRUE(j["results"].empty());
    EXPECT_EQ(j["summary"]["pass"], 0);
    EXPECT_EQ(j["summary"]["fail"], 0);
}

TEST(Report, SchemaAndOrdering) {
    SuiteReport rep;
    rep.suite = "demo";
    rep.catalog = {"b", "a", "b"};
    rep.add("z", "check", false, "why");
    rep.add("a", "check", true);
    rep.finalize();
    EXPECT_EQ(rep.passed, 1u);
    EXPECT_EQ(rep.failed, 1u);
    const auto j = nlohmann::json::parse(render_report(rep, ReportFormat::json));
    EXPECT_EQ(j["catalog"], nlohmann::json({"a", "b"}));
    EXPECT_EQ(j["results"][0]["ring"], "a");
    EXPECT_TRUE(j["results"][0]["witness"].is_null());
    EXPECT_EQ(j["results"][1]["witness"], "why");
    EXPECT_NE(render_report(rep, ReportFormat::text).find("summary: 1 pass, 1 fail"), std::string::npos);
}

TEST(Report, WritesFilesAndReportsIoErrors) {
    SuiteReport rep;
    rep.suite = "file";
    rep.finalize();
    const auto path = std::filesystem::temp_directory_path() / "residua_report_test.json";
    report_emit(rep, ReportFormat::json, path.string());
    std::ifstream in(path);
    std::stringstream body;
    body << in.rdbuf();
    EXPECT_EQ(body.str(), render_report(rep, ReportFormat::json));
    std::filesystem::remove(path);
    EXPECT_THROW(report_emit(rep, ReportFormat::json, "/nonexistent-dir/x/report.json"), IoError);
}

TEST(Suites, UnknownNamesAreRejected) {
    EXPECT_THROW(run_suite("bogus", SuiteOptions{}), UnknownSuite);
    EXPECT_THROW(run_search("bogus", SuiteOptions{}), UnknownSuite);
}

TEST(Suites, RunsAreDeterministic) {
    SuiteOptions o;
    o.max_order = 16;
    for (const auto& name : suite_names()) {
        const auto a = render_report(run_suite(name, o), ReportFormat::json);
        const auto b = render_report(run_suite(name, o), ReportFormat::json);
        EXPECT_EQ(a, b) << name;
    }
}

TEST(Suites, EverySuitePassesAtSmallBounds) {
    SuiteOptions o;
    o.max_order = 16;
    for (const auto& name : suite_names()) {
        const auto rep = run_suite(name, o);
        EXPECT_EQ(rep.failed, 0u) << name;
        EXPECT_GT(rep.passed, 0u) << name;
        EXPECT_EQ(rep.passed + rep.failed, rep.results.size());
    }
}

TEST(Suites, UserRingsJoinTheCatalog) {
    SuiteOptions o;
    o.max_order = 8;
    o.extra_rings = {"prod(Z/2,Z/3)"};
    const auto rep = run_suite("lemma22", o);
    EXPECT_NE(std::find(rep.catalog.begin(), rep.catalog.end(), "prod(Z/2,Z/3)"), rep.catalog.end());
}

TEST(Searches, EmptyCatalogGivesEmptyReport) {
    SuiteOptions o;
    o.max_order = 0;
    for (const auto& t : search_targets()) {
        const auto rep = run_search(t, o);
        EXPECT_TRUE(rep.results.empty()) << t;
        EXPECT_EQ(rep.failed, 0u);
    }
}

TEST(Searches, SmallBoundsFindNothing) {
    SuiteOptions o;
    o.max_order = 27;
    for (const auto& t : search_targets()) EXPECT_EQ(run_search(t, o).failed, 0u) << t;
}

TEST(Info, Examples) {
    const auto z4 = nlohmann::json::parse(cmd_info("Z/4", ReportFormat::json));
    EXPECT_TRUE(z4["local"].get<bool>());
    EXPECT_TRUE(z4["subfields"].empty());
    EXPECT_FALSE(z4["equicharacteristic"].get<bool>());

    const auto dual = nlohmann::json::parse(cmd_info("GF(2)[x]/(x^2)", ReportFormat::json));
    EXPECT_TRUE(dual["local"].get<bool>());
    EXPECT_EQ(dual["largest_subfield"], "{0,1}");
    ASSERT_EQ(dual["restrictions"].size(), 1u);
    EXPECT_TRUE(dual["restrictions"][0]["direct_sum"].get<bool>());

    const auto f2f2 = nlohmann::json::parse(cmd_info("prod(GF(2),GF(2))", ReportFormat::json));
    EXPECT_EQ(f2f2["maximal_ideals"].size(), 2u);
    EXPECT_FALSE(f2f2["local"].get<bool>());
    EXPECT_NE(cmd_info("GF(4)", ReportFormat::text).find("order:              4"), std::string::npos);
}

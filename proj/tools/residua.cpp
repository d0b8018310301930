// Command-line front end: info, verify, search and parse.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "residua/dsl.hpp"
#include "residua/errors.hpp"
#include "residua/suites.hpp"

namespace {

struct RunFlags {
    std::size_t max_order = 0;
    std::vector<std::uint32_t> fields{2, 3};
    std::vector<std::string> rings;
    std::string format = "text";
    std::string output;
};

void add_run_flags(CLI::App* cmd, RunFlags& flags, std::size_t default_order) {
    flags.max_order = default_order;
    cmd->add_option("--max-order", flags.max_order, "largest ring order in the catalog")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{0}, residua::kTableCap));
    cmd->add_option("--fields", flags.fields, "primes p whose GF(p^k) families enter the catalog")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--ring", flags.rings, "extra ring expression appended to the catalog");
    cmd->add_option("--format", flags.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", flags.output, "write the report to a file instead of standard output");
}

residua::ReportFormat format_of(const std::string& name) {
    return name == "json" ? residua::ReportFormat::json : residua::ReportFormat::text;
}

residua::SuiteOptions options_of(const RunFlags& flags) {
    return residua::SuiteOptions{flags.max_order, flags.fields, flags.rings};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"residua: finite commutative rings, residue fields and completions"};
    app.require_subcommand(1);

    std::string info_expr, info_format = "text";
    auto* info = app.add_subcommand("info", "summarize a ring given as an expression");
    info->add_option("expr", info_expr, "ring expression, e.g. \"GF(2)[x]/(x^2)\"")->required();
    info->add_option("--format", info_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string suite;
    RunFlags verify_flags;
    auto* verify = app.add_subcommand("verify", "run a verification suite over the catalog");
    verify->add_option("suite", suite, "suite name")->required();
    add_run_flags(verify, verify_flags, residua::kSuiteCap);

    std::string target;
    RunFlags search_flags;
    auto* search = app.add_subcommand("search", "search the catalog for counterexamples");
    search->add_option("target", target, "q31, absiso or uniqueness")->required();
    add_run_flags(search, search_flags, 81);

    std::string parse_expr;
    auto* parse = app.add_subcommand("parse", "parse an expression and print its canonical form");
    parse->add_option("expr", parse_expr, "ring expression")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) {
            std::cout << residua::cmd_info(info_expr, format_of(info_format));
            return 0;
        }
        if (*parse) {
            std::cout << residua::to_string(residua::parse_ring_expr(parse_expr)) << "\n";
            return 0;
        }
        const bool is_verify = static_cast<bool>(*verify);
        const RunFlags& flags = is_verify ? verify_flags : search_flags;
        const auto report = is_verify ? residua::run_suite(suite, options_of(flags))
                                      : residua::run_search(target, options_of(flags));
        residua::report_emit(report, format_of(flags.format), flags.output);
        return report.failed == 0 ? 0 : 1;
    } catch (const residua::Error& e) {
        std::cerr << "residua: " << e.what() << "\n";
        return 2;
    }
}

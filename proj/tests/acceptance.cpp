// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "residua/dsl.hpp"
#include "residua/errors.hpp"
#include "residua/representatives.hpp"
#include "residua/suites.hpp"

using namespace residua;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SuiteOptions bounded(std::size_t max_order) {
    SuiteOptions o;
    o.max_order = max_order;
    return o;
}

std::string counts(const SuiteReport& r) {
    return std::to_string(r.results.size()) + " checks, " + std::to_string(r.failed) + " failures";
}

std::string summary(const SuiteReport& r, double secs) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ", %.2fs", secs);
    return counts(r) + buf;
}

Outcome suite_clean(const std::string& name, std::size_t max_order, double limit, std::size_t min_rows = 1) {
    const auto start = Clock::now();
    const auto rep = run_suite(name, bounded(max_order));
    const double secs = seconds_since(start);
    return {rep.failed == 0 && rep.results.size() >= min_rows && secs < limit, summary(rep, secs)};
}

Outcome unit_decomposition() {
    const auto start = Clock::now();
    const auto rep = run_suite("lemma21", bounded(64));
    const double secs = seconds_since(start);
    std::size_t two = 0, three = 0;
    for (const auto& label : rep.catalog) {
        const auto r = evaluate(label);
        const auto c = characteristic(r);
        two += c % 2 == 0 ? 1 : 0;
        three += c % 3 == 0 ? 1 : 0;
    }
    return {rep.failed == 0 && rep.results.size() >= 30 && two > 0 && three > 0 && secs < 60,
              summary(rep, secs) + ", " + std::to_string(two) + " over p=2, " + std::to_string(three) +
                  " over p=3"};
}

Outcome equivalence_roundtrip_suite() {
    const auto rep = run_suite("roundtrip", bounded(64));
    std::set<std::string> labels(rep.catalog.begin(), rep.catalog.end());
    bool covered = true;
    for (const char* e : {"sdp(2,0,zero)", "sdp(2,1,zero)", "sdp(2,1,unital)", "sdp(2,2,zero)", "sdp(2,2,unital)",
                          "sdp(3,0,zero)", "sdp(3,1,zero)", "sdp(3,1,unital)", "sdp(3,2,zero)", "sdp(3,2,unital)"})
        covered = covered && labels.count(e) == 1;
    return {rep.failed == 0 && covered, counts(rep) + (covered ? ", all ten pairs present" : ", missing pairs")};
}

Outcome extremes_suite() {
    const auto rep = run_suite("extremes", bounded(64));
    std::size_t unital = 0, square_zero = 0;
    for (const auto& row : rep.results) (row.ring.find("unital") != std::string::npos ? unital : square_zero)++;
    return {rep.failed == 0 && unital > 0 && square_zero > 0,
            std::to_string(unital) + " unital, " + std::to_string(square_zero) + " square-zero instances, " +
                std::to_string(rep.failed) + " failures"};
}

Outcome dichotomy_suite() {
    const auto rep = run_suite("dichotomy", bounded(32));
    bool anchors = true;
    std::size_t anchor_rows = 0;
    for (const auto& row : rep.results)
        if (row.check.rfind("anchor:", 0) == 0) {
            ++anchor_rows;
            anchors = anchors && row.pass;
        }
    return {rep.failed == 0 && anchors && anchor_rows == 2,
            summary(rep, 0).substr(0, summary(rep, 0).rfind(',')) + ", anchors " + (anchors ? "hold" : "fail")};
}

Outcome q31_search() {
    const auto start = Clock::now();
    const auto rep = run_search("q31", bounded(81));
    const double secs = seconds_since(start);
    std::size_t local = 0;
    for (const auto& label : rep.catalog) local += is_local(evaluate(label)) ? 1 : 0;
    bool traced = true;
    for (const auto& row : rep.results)
        traced = traced && row.witness && row.witness->find("complete=") != std::string::npos;
    return {rep.failed == 0 && rep.results.size() == local && local > 0 && traced && secs < 300,
            std::to_string(rep.failed) + " counterexamples among " + std::to_string(local) +
                " local rings, traces " + (traced ? "complete" : "missing") + ", " + summary(rep, secs)};
}

Outcome oracle_cross_checks() {
    std::size_t rings = 0, pairs = 0, mismatches = 0;
    for (const auto& r : fixtures::small_rings(16)) {
        ++rings;
        std::vector<std::vector<Elem>> got;
        for (const auto& m : maximal_ideals(r)) got.push_back(m.members);
        mismatches += got == oracle::maximal_ideals(r) ? 0 : 1;
        std::vector<std::vector<Elem>> fields;
        for (const auto& k : enumerate_subfields(r)) fields.push_back(k.members);
        mismatches += fields == oracle::subfields(r, true) ? 0 : 1;
    }
    const auto small = fixtures::small_rings(8);
    for (const auto& s : small)
        for (const auto& t : small) {
            ++pairs;
            const auto all = oracle::homomorphisms(s, t, false);
            std::vector<std::vector<Elem>> unital, got_all, got_unital;
            for (const auto& f : all)
                if (f[s.one()] == t.one()) unital.push_back(f);
            for (const auto& f : hom_enumerate(s, t, false)) got_all.push_back(f.map);
            for (const auto& f : hom_enumerate(s, t, true)) got_unital.push_back(f.map);
            mismatches += (got_all == all ? 0 : 1) + (got_unital == unital ? 0 : 1);
        }
    return {mismatches == 0, std::to_string(rings) + " rings (order <= 16), " + std::to_string(pairs) +
                                 " hom pairs (order <= 8), " + std::to_string(mismatches) + " mismatches"};
}

Outcome parser_corpora() {
    std::size_t fixpoints = 0, positioned = 0;
    for (const auto& text : fixtures::valid_corpus()) {
        try {
            const auto a = parse_ring_expr(text);
            const auto printed = to_string(a);
            const auto b = parse_ring_expr(printed);
            fixpoints += same_structure(a, b) && to_string(b) == printed ? 1 : 0;
        } catch (const Error&) {
        }
    }
    for (const auto& text : fixtures::invalid_corpus()) {
        try {
            parse_ring_expr(text);
        } catch (const ParseError& e) {
            positioned += e.offset() <= text.size() && !e.expected().empty() ? 1 : 0;
        } catch (const Error&) {
        }
    }
    const std::size_t nv = fixtures::valid_corpus().size(), ni = fixtures::invalid_corpus().size();
    return {nv == 50 && ni == 20 && fixpoints == nv && positioned == ni,
            std::to_string(fixpoints) + "/" + std::to_string(nv) + " fixpoints, " + std::to_string(positioned) +
                "/" + std::to_string(ni) + " positioned errors"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"unit decomposition over local rings with a largest subfield", unit_decomposition},
        {"direct sum iff restricted projection is bijective", [] { return suite_clean("lemma22", 64, 1e9); }},
        {"largest subfield is a field of representatives", [] { return suite_clean("thm23", 64, 1e9); }},
        {"field of representatives is maximal among subfields", [] { return suite_clean("prop24", 64, 1e9); }},
        {"split-extension diagram identities, |R| <= 32", [] { return suite_clean("diagram", 32, 120); }},
        {"pair -> triple -> pair round trip", equivalence_roundtrip_suite},
        {"unital and square-zero extreme cases", extremes_suite},
        {"completion dichotomy and anchors, order <= 32", dichotomy_suite},
        {"equicharacteristic local rings admit a field of representatives",
         [] { return suite_clean("cohen", 64, 1e9); }},
        {"homs to GF(q), residue-rational maximal ideals and roots agree",
         [] { return suite_clean("gelfand", 64, 1e9); }},
        {"local-but-not-complete search, order <= 81", q31_search},
        {"oracle cross-checks", oracle_cross_checks},
        {"parser round trip and negative corpus", parser_corpora},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}

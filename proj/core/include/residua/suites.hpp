#pragma once

// Verification suites, counterexample searches and the ring summary behind
// the command-line tool.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "residua/report.hpp"
#include "residua/ring.hpp"

namespace residua {

struct SuiteOptions {
    std::size_t max_order = kSuiteCap;
    std::vector<std::uint32_t> fields{2, 3};
    std::vector<std::string> extra_rings;
};

/// lemma21 lemma22 thm23 prop24 diagram roundtrip dichotomy extremes cohen gelfand
const std::vector<std::string>& suite_names();
/// q31 absiso uniqueness
const std::vector<std::string>& search_targets();

/// Runs a verification suite over the catalog. Every row is an expected-true
/// check, so a clean run has summary.fail == 0. Throws UnknownSuite.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

/// Runs a search; each finding is reported as a failing row with its trace,
/// every instance examined without a finding as a passing row.
/// Throws UnknownSuite for an unrecognized target.
SuiteReport run_search(std::string_view target, const SuiteOptions& options);

/// Order, characteristic, units, locality, maximal ideals, subfields and the
/// residue restriction verdict for every (subfield, maximal ideal) pair.
std::string ring_info(const Ring& r, ReportFormat format);
std::string cmd_info(std::string_view expr, ReportFormat format);

/// "{a,b,c}" using the ring's element names.
std::string set_text(const Ring& r, const ElemSet& members);

}  // namespace residua

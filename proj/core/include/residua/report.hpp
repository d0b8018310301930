#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace residua {

struct ResultRow {
    std::string ring;
    std::string check;
    bool pass = true;
    std::optional<std::string> witness;

    auto operator<=>(const ResultRow&) const = default;
};

struct SuiteReport {
    std::string suite;
    std::vector<std::string> catalog;
    std::vector<ResultRow> results;
    std::size_t passed = 0;
    std::size_t failed = 0;

    void add(std::string ring, std::string check, bool pass,
             std::optional<std::string> witness = std::nullopt);

    /// Sorts results by (ring, check, pass, witness), sorts the catalog and
    /// recomputes the summary counts.
    void finalize();
};

enum class ReportFormat { text, json };

/// Serialized report; identical inputs give identical bytes.
std::string render_report(const SuiteReport& report, ReportFormat format);

/// Writes to `path`, or standard output when path is empty. Throws IoError.
void report_emit(const SuiteReport& report, ReportFormat format, const std::string& path = {});

}  // namespace residua

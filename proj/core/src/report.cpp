#include "residua/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "residua/errors.hpp"

namespace residua {

void SuiteReport::add(std::string ring, std::string check, bool pass,
                      std::optional<std::string> witness) {
    results.push_back(ResultRow{std::move(ring), std::move(check), pass, std::move(witness)});
}

void SuiteReport::finalize() {
    std::sort(results.begin(), results.end());
    std::sort(catalog.begin(), catalog.end());
    catalog.erase(std::unique(catalog.begin(), catalog.end()), catalog.end());
    passed = static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const ResultRow& r) { return r.pass; }));
    failed = results.size() - passed;
}

std::string render_report(const SuiteReport& report, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["suite"] = report.suite;
        j["catalog"] = report.catalog;
        j["results"] = nlohmann::ordered_json::array();
        for (const auto& r : report.results) {
            nlohmann::ordered_json row;
            row["ring"] = r.ring;
            row["check"] = r.check;
            row["pass"] = r.pass;
            row["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json();
            j["results"].push_back(std::move(row));
        }
        j["summary"] = {{"pass", report.passed}, {"fail", report.failed}};
        return j.dump(2) + "\n";
    }

    std::size_t ring_w = 4, check_w = 5;
    for (const auto& r : report.results) {
        ring_w = std::max(ring_w, r.ring.size());
        check_w = std::max(check_w, r.check.size());
    }
    std::ostringstream out;
    out << "suite: " << report.suite << "  (" << report.catalog.size() << " catalog rings)\n";
    out << std::left << std::setw(static_cast<int>(ring_w)) << "ring" << "  "
        << std::setw(static_cast<int>(check_w)) << "check" << "  result  witness\n";
    for (const auto& r : report.results) {
        out << std::left << std::setw(static_cast<int>(ring_w)) << r.ring << "  "
            << std::setw(static_cast<int>(check_w)) << r.check << "  " << (r.pass ? "pass  " : "FAIL  ")
            << "  " << r.witness.value_or("-") << "\n";
    }
    out << "summary: " << report.passed << " pass, " << report.failed << " fail\n";
    return out.str();
}

void report_emit(const SuiteReport& report, ReportFormat format, const std::string& path) {
    const std::string body = render_report(report, format);
    if (path.empty()) {
        std::cout << body;
        std::cout.flush();
        if (!std::cout) throw IoError("failed writing to standard output");
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path);
    file << body;
    if (!file) throw IoError("failed writing " + path);
}

}  // namespace residua

#include <algorithm>

#include "ropa/validation/validation.hpp"

namespace ropa {

namespace {

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

// Joins padded cells with two spaces, dropping trailing blanks.
std::string table_row(const std::vector<std::string>& cells, const std::vector<std::size_t>& widths) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += "  ";
        line += i + 1 < cells.size() ? pad(cells[i], widths[i]) : cells[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line + "\n";
}

std::string render(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) out += table_row(row, widths);
    return out;
}

std::string_view gap_symbol(GapStatus s) {
    switch (s) {
    case GapStatus::present: return "ok";
    case GapStatus::missing_required: return "MISSING";
    case GapStatus::missing_optional: return "optional";
    case GapStatus::not_in_template: return "-";
    }
    return "?";
}

} // namespace

nlohmann::json to_json(const Violation& v) {
    return {{"code", to_string(v.code)},         {"concept_name", v.concept_name}, {"record_id", v.record_id},
            {"severity", to_string(v.severity)}, {"detail", v.detail}};
}

nlohmann::json to_json(const ValidationReport& report) {
    auto violations = nlohmann::json::array();
    for (const auto& v : report.violations) violations.push_back(to_json(v));
    return {{"jurisdiction", to_string(report.jurisdiction)},
            {"records_checked", report.records_checked},
            {"compliant", report.compliant},
            {"violations", std::move(violations)}};
}

nlohmann::json to_json(const GapReport& report) {
    auto jurisdictions = nlohmann::json::array();
    for (auto j : report.jurisdictions) jurisdictions.push_back(to_string(j));
    auto cells = nlohmann::json::array();
    for (const auto& c : report.cells) {
        cells.push_back({{"jurisdiction", to_string(c.jurisdiction)},
                         {"concept_name", c.concept_name},
                         {"status", to_string(c.status)},
                         {"populated", c.populated}});
    }
    return {{"jurisdictions", std::move(jurisdictions)},
            {"concepts", report.concepts},
            {"records_considered", report.records_considered},
            {"cells", std::move(cells)}};
}

std::string format_text(const ValidationReport& report) {
    std::string out = std::string(to_string(report.jurisdiction)) + ": " +
                      (report.compliant ? "compliant" : "NOT compliant") + ", " +
                      std::to_string(report.records_checked) + " records checked, " +
                      std::to_string(report.error_count()) + " errors, " + std::to_string(report.warning_count()) +
                      " warnings\n";
    if (report.violations.empty()) return out;

    std::vector<std::vector<std::string>> rows{{"record", "concept", "code", "severity", "detail"}};
    for (const auto& v : report.violations) {
        rows.push_back({v.record_id, v.concept_name, std::string(to_string(v.code)),
                        std::string(to_string(v.severity)), v.detail});
    }
    return out + render(rows);
}

std::string format_text(const GapReport& report) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"concept"};
    for (auto j : report.jurisdictions) header.emplace_back(to_string(j));
    rows.push_back(std::move(header));

    for (const auto& name : report.concepts) {
        std::vector<std::string> row{name};
        for (auto j : report.jurisdictions) row.emplace_back(gap_symbol(report.at(j, name).status));
        rows.push_back(std::move(row));
    }

    std::string out = render(rows);
    out += "\n";
    for (auto j : report.jurisdictions) {
        out += std::string(to_string(j)) + ": " + std::to_string(report.count(j, GapStatus::missing_required)) +
               " missing required, " + std::to_string(report.count(j, GapStatus::present)) + " present over " +
               std::to_string(report.records_considered) + " records\n";
    }
    out += "legend: ok = every record has a value, MISSING = required but not always filled, "
           "optional = in template but not always filled, - = not in template\n";
    return out;
}

} // namespace ropa

#include <algorithm>
#include <stdexcept>

#include "ropa/core/error.hpp"
#include "ropa/validation/validation.hpp"

namespace ropa {

std::string_view to_string(GapStatus s) noexcept {
    switch (s) {
    case GapStatus::present: return "present";
    case GapStatus::missing_required: return "missing_required";
    case GapStatus::missing_optional: return "missing_optional";
    case GapStatus::not_in_template: return "not_in_template";
    }
    return "unknown";
}

const GapCell& GapReport::at(Jurisdiction j, std::string_view concept_name) const {
    auto it = std::find_if(cells.begin(), cells.end(), [&](const GapCell& c) {
        return c.jurisdiction == j && c.concept_name == concept_name;
    });
    if (it == cells.end())
        throw std::out_of_range("no gap cell for " + std::string(to_string(j)) + "/" + std::string(concept_name));
    return *it;
}

std::size_t GapReport::count(Jurisdiction j, GapStatus status) const {
    return static_cast<std::size_t>(std::count_if(
        cells.begin(), cells.end(), [&](const GapCell& c) { return c.jurisdiction == j && c.status == status; }));
}

GapReport gap_analysis(std::span<const RopaRecord> records, std::span<const JurisdictionProfile> profiles,
                       const ConceptRegistry& registry) {
    if (profiles.empty()) throw Error(Errc::constraint_violation, "", "gap analysis needs at least one profile");

    GapReport report;
    report.records_considered = records.size();
    for (const auto& def : registry.concepts()) report.concepts.push_back(def.name);

    std::vector<std::size_t> populated;
    for (const auto& def : registry.concepts()) {
        populated.push_back(static_cast<std::size_t>(std::count_if(
            records.begin(), records.end(), [&](const RopaRecord& r) { return r.has_value(def.name); })));
    }

    for (const auto& profile : profiles) {
        report.jurisdictions.push_back(profile.code);
        std::size_t i = 0;
        for (const auto& def : registry.concepts()) {
            GapCell cell{profile.code, def.name, GapStatus::not_in_template, populated[i++]};
            if (profile.references(def.name)) {
                if (!records.empty() && cell.populated == records.size()) {
                    cell.status = GapStatus::present;
                } else if (def.mandatory_art30 || profile.requires_concept(def.name)) {
                    cell.status = GapStatus::missing_required;
                } else {
                    cell.status = GapStatus::missing_optional;
                }
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

} // namespace ropa

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ropa/core/record.hpp"
#include "ropa/core/registry.hpp"
#include "ropa/ingest/profile.hpp"

namespace ropa {

enum class ViolationCode {
    missing_mandatory,
    missing_jurisdiction_required,
    vocabulary_violation,
    cardinality_violation,
    unknown_concept,
};

enum class Severity { error, warning };

std::string_view to_string(ViolationCode c) noexcept;
std::string_view to_string(Severity s) noexcept;

struct Violation {
    ViolationCode code = ViolationCode::missing_mandatory;
    // Offending concept, or the raw key for unknown_concept.
    std::string concept_name;
    std::string record_id;
    Severity severity = Severity::error;
    std::string detail;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    Jurisdiction jurisdiction = Jurisdiction::UK;
    // Ordered by (record_id, concept_name, code name).
    std::vector<Violation> violations;
    std::size_t records_checked = 0;
    bool compliant = true;

    std::size_t error_count() const noexcept;
    std::size_t warning_count() const noexcept;

    bool operator==(const ValidationReport&) const = default;
};

// Case-insensitive, trimmed membership test against the union of the
// concept's specified values and the profile's controlled vocabulary for it.
// Concepts with neither accept anything. The returned violation has an empty
// record_id.
std::optional<Violation> check_vocabulary(std::string_view value, const ConceptDefinition& def,
                                          const JurisdictionProfile& profile);

// Per record:
//   missing_mandatory             error, each mandatory concept without a value
//   missing_jurisdiction_required error, each profile-required concept that is
//                                 not mandatory and has no value
//   vocabulary_violation          error, each non-blank value failing check_vocabulary
//   cardinality_violation         error, a single-valued concept with several values
//   unknown_concept               warning, each value key outside the registry
// A concept has a value when at least one of its strings is non-blank.
ValidationReport validate(std::span<const RopaRecord> records, const JurisdictionProfile& profile,
                          const ConceptRegistry& registry);

enum class GapStatus { present, missing_required, missing_optional, not_in_template };

std::string_view to_string(GapStatus s) noexcept;

struct GapCell {
    Jurisdiction jurisdiction = Jurisdiction::UK;
    std::string concept_name;
    GapStatus status = GapStatus::not_in_template;
    // Records carrying a value for the concept.
    std::size_t populated = 0;

    bool operator==(const GapCell&) const = default;
};

// Matrix of profiles x registry concepts, row-major in profile order then
// registry order.
struct GapReport {
    std::vector<Jurisdiction> jurisdictions;
    std::vector<std::string> concepts;
    std::vector<GapCell> cells;
    std::size_t records_considered = 0;

    // Throws std::out_of_range for a pair outside the matrix.
    const GapCell& at(Jurisdiction j, std::string_view concept_name) const;
    std::size_t count(Jurisdiction j, GapStatus status) const;

    bool operator==(const GapReport&) const = default;
};

// A cell is not_in_template when the profile has no column for the concept,
// present when every record has a value for it (and there is at least one
// record), and otherwise missing_required if the concept is mandatory or
// required by the profile, missing_optional if not.
// Throws Error(constraint_violation) when `profiles` is empty.
GapReport gap_analysis(std::span<const RopaRecord> records, std::span<const JurisdictionProfile> profiles,
                       const ConceptRegistry& registry);

nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const GapReport& report);

// Plain-text tables for terminals, each line ending in "\n".
std::string format_text(const ValidationReport& report);
std::string format_text(const GapReport& report);

} // namespace ropa

#include <algorithm>

#include "ropa/core/text.hpp"
#include "ropa/validation/validation.hpp"

namespace ropa {

std::string_view to_string(ViolationCode c) noexcept {
    switch (c) {
    case ViolationCode::missing_mandatory: return "missing_mandatory";
    case ViolationCode::missing_jurisdiction_required: return "missing_jurisdiction_required";
    case ViolationCode::vocabulary_violation: return "vocabulary_violation";
    case ViolationCode::cardinality_violation: return "cardinality_violation";
    case ViolationCode::unknown_concept: return "unknown_concept";
    }
    return "unknown";
}

std::string_view to_string(Severity s) noexcept { return s == Severity::error ? "error" : "warning"; }

std::size_t ValidationReport::error_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [](const Violation& v) { return v.severity == Severity::error; }));
}

std::size_t ValidationReport::warning_count() const noexcept { return violations.size() - error_count(); }

std::optional<Violation> check_vocabulary(std::string_view value, const ConceptDefinition& def,
                                          const JurisdictionProfile& profile) {
    const auto local = profile.vocabulary_for(def.name);
    if (def.specified_values.empty() && local.empty()) return std::nullopt;

    const auto key = text::ascii_lower(text::trim(value));
    auto matches = [&](const std::string& allowed) { return text::ascii_lower(text::trim(allowed)) == key; };
    if (std::any_of(def.specified_values.begin(), def.specified_values.end(), matches) ||
        std::any_of(local.begin(), local.end(), matches))
        return std::nullopt;

    return Violation{ViolationCode::vocabulary_violation, def.name, {}, Severity::error,
                     "'" + std::string(text::trim(value)) + "' is not an allowed value for " + def.display_name};
}

ValidationReport validate(std::span<const RopaRecord> records, const JurisdictionProfile& profile,
                          const ConceptRegistry& registry) {
    ValidationReport report;
    report.jurisdiction = profile.code;
    report.records_checked = records.size();

    for (const auto& record : records) {
        auto emit = [&](ViolationCode code, const std::string& name, Severity severity, std::string detail) {
            report.violations.push_back(Violation{code, name, record.record_id, severity, std::move(detail)});
        };

        for (const auto& def : registry.concepts()) {
            const bool present = record.has_value(def.name);
            if (!present && def.mandatory_art30) {
                emit(ViolationCode::missing_mandatory, def.name, Severity::error,
                     def.display_name + " is mandatory and has no value");
            } else if (!present && profile.requires_concept(def.name)) {
                emit(ViolationCode::missing_jurisdiction_required, def.name, Severity::error,
                     def.display_name + " is required by the " + std::string(to_string(profile.code)) +
                         " template and has no value");
            }

            std::size_t filled = 0;
            for (const auto& value : record.values_of(def.name)) {
                if (text::is_blank(value)) continue;
                ++filled;
                if (auto v = check_vocabulary(value, def, profile)) {
                    v->record_id = record.record_id;
                    report.violations.push_back(std::move(*v));
                }
            }
            if (def.cardinality == Cardinality::single && filled > 1) {
                emit(ViolationCode::cardinality_violation, def.name, Severity::error,
                     def.display_name + " takes one value but has " + std::to_string(filled));
            }
        }

        for (const auto& [name, list] : record.values) {
            if (!registry.contains(name))
                emit(ViolationCode::unknown_concept, name, Severity::warning, "'" + name + "' is not a registry concept");
        }
    }

    std::stable_sort(report.violations.begin(), report.violations.end(), [](const Violation& a, const Violation& b) {
        if (a.record_id != b.record_id) return a.record_id < b.record_id;
        if (a.concept_name != b.concept_name) return a.concept_name < b.concept_name;
        return to_string(a.code) < to_string(b.code);
    });
    report.compliant = report.error_count() == 0;
    return report;
}

} // namespace ropa

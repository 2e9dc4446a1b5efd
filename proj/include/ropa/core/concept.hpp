#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ropa {

enum class Cardinality { single, multi };

enum class ValueKind { free_text, party, date_or_duration, enumerated, boolean, reference };

std::string_view to_string(Cardinality c) noexcept;
std::string_view to_string(ValueKind k) noexcept;
std::optional<Cardinality> parse_cardinality(std::string_view s) noexcept;
std::optional<ValueKind> parse_value_kind(std::string_view s) noexcept;

// One concept of the consolidated ROPA model.
struct ConceptDefinition {
    std::string name;
    std::string display_name;
    std::vector<std::string> synonyms;
    std::vector<std::string> article30_refs;
    bool mandatory_art30 = false;
    Cardinality cardinality = Cardinality::multi;
    ValueKind value_kind = ValueKind::free_text;
    std::vector<std::string> specified_values;

    bool has_specified_values() const noexcept { return !specified_values.empty(); }

    bool operator==(const ConceptDefinition&) const = default;
};

// Field names match the registry file format exactly. Throws Error(parse_error).
ConceptDefinition concept_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ConceptDefinition& def);

} // namespace ropa

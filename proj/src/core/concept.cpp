#include "ropa/core/concept.hpp"

#include "ropa/core/error.hpp"

namespace ropa {

std::string_view to_string(Cardinality c) noexcept {
    return c == Cardinality::single ? "single" : "multi";
}

std::string_view to_string(ValueKind k) noexcept {
    switch (k) {
    case ValueKind::free_text: return "free_text";
    case ValueKind::party: return "party";
    case ValueKind::date_or_duration: return "date_or_duration";
    case ValueKind::enumerated: return "enumerated";
    case ValueKind::boolean: return "boolean";
    case ValueKind::reference: return "reference";
    }
    return "free_text";
}

std::optional<Cardinality> parse_cardinality(std::string_view s) noexcept {
    if (s == "single") return Cardinality::single;
    if (s == "multi") return Cardinality::multi;
    return std::nullopt;
}

std::optional<ValueKind> parse_value_kind(std::string_view s) noexcept {
    for (auto k : {ValueKind::free_text, ValueKind::party, ValueKind::date_or_duration, ValueKind::enumerated,
                   ValueKind::boolean, ValueKind::reference}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

namespace {

std::vector<std::string> string_list(const nlohmann::json& j, const char* key, const std::string& owner) {
    std::vector<std::string> out;
    if (!j.contains(key) || j.at(key).is_null()) return out;
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw Error(Errc::parse_error, owner, std::string("field '") + key + "' must be an array");
    for (const auto& item : arr) {
        if (!item.is_string()) throw Error(Errc::parse_error, owner, std::string("field '") + key + "' must hold strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace

ConceptDefinition concept_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(Errc::parse_error, {}, "concept must be a JSON object");
    if (!j.contains("name") || !j.at("name").is_string())
        throw Error(Errc::parse_error, {}, "concept without a string 'name'");

    ConceptDefinition c;
    c.name = j.at("name").get<std::string>();
    c.display_name = j.value("display_name", c.name);
    c.synonyms = string_list(j, "synonyms", c.name);
    c.article30_refs = string_list(j, "article30_refs", c.name);
    c.specified_values = string_list(j, "specified_values", c.name);
    c.mandatory_art30 = j.value("mandatory_art30", false);

    auto card = parse_cardinality(j.value("cardinality", std::string("multi")));
    if (!card) throw Error(Errc::parse_error, c.name, "unknown cardinality for concept " + c.name);
    c.cardinality = *card;

    auto kind = parse_value_kind(j.value("value_kind", std::string("free_text")));
    if (!kind) throw Error(Errc::parse_error, c.name, "unknown value_kind for concept " + c.name);
    c.value_kind = *kind;
    return c;
}

nlohmann::json to_json(const ConceptDefinition& c) {
    return nlohmann::json{
        {"name", c.name},
        {"display_name", c.display_name},
        {"synonyms", c.synonyms},
        {"article30_refs", c.article30_refs},
        {"mandatory_art30", c.mandatory_art30},
        {"cardinality", to_string(c.cardinality)},
        {"value_kind", to_string(c.value_kind)},
        {"specified_values", c.specified_values},
    };
}

} // namespace ropa

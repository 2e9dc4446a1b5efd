#include "ropa/core/registry.hpp"

#include <fstream>
#include <istream>

#include "ropa/core/error.hpp"
#include "ropa/core/text.hpp"

namespace ropa {

const ConceptDefinition* ConceptRegistry::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    return it == by_name_.end() ? nullptr : &concepts_[it->second];
}

ConceptRegistry build_registry(std::vector<ConceptDefinition> definitions, std::string version) {
    if (definitions.empty()) throw Error(Errc::constraint_violation, {}, "registry needs at least one concept");

    ConceptRegistry registry;
    registry.version_ = std::move(version);

    for (std::size_t i = 0; i < definitions.size(); ++i) {
        const auto& c = definitions[i];
        if (c.name.empty()) throw Error(Errc::constraint_violation, c.name, "concept with an empty name");
        if (!registry.by_name_.emplace(c.name, i).second)
            throw Error(Errc::duplicate_name, c.name, "concept '" + c.name + "' is defined twice");
        if (c.has_specified_values() && c.value_kind != ValueKind::enumerated)
            throw Error(Errc::constraint_violation, c.name,
                        "concept '" + c.name + "' lists specified values but is not enumerated");
        if (c.mandatory_art30 && c.article30_refs.empty())
            throw Error(Errc::constraint_violation, c.name,
                        "mandatory concept '" + c.name + "' has no Article 30 reference");
    }

    for (std::size_t i = 0; i < definitions.size(); ++i) {
        const auto& c = definitions[i];
        std::vector<std::string> keys{text::normalize_key(c.name), text::normalize_key(c.display_name)};
        for (const auto& s : c.synonyms) keys.push_back(text::normalize_key(s));
        for (const auto& key : keys) {
            if (key.empty()) continue;
            auto [it, inserted] = registry.by_key_.emplace(key, i);
            if (!inserted && it->second != i) {
                throw Error(Errc::synonym_collision, c.name,
                            "header '" + key + "' of concept '" + c.name + "' already resolves to '" +
                                definitions[it->second].name + "'");
            }
        }
    }

    registry.concepts_ = std::move(definitions);
    return registry;
}

const ConceptDefinition* lookup_concept(const ConceptRegistry& registry, std::string_view header) {
    auto it = registry.by_key_.find(text::normalize_key(header));
    return it == registry.by_key_.end() ? nullptr : &registry.concepts_[it->second];
}

RegistryCensus registry_census(const ConceptRegistry& registry) {
    RegistryCensus census;
    for (const auto& c : registry.concepts()) {
        ++census.total;
        if (c.mandatory_art30) ++census.mandatory;
        if (c.has_specified_values()) ++census.with_specified_values;
    }
    return census;
}

ConceptRegistry registry_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("concepts") || !j.at("concepts").is_array())
        throw Error(Errc::parse_error, {}, "registry document needs a 'concepts' array");
    std::vector<ConceptDefinition> definitions;
    for (const auto& item : j.at("concepts")) definitions.push_back(concept_from_json(item));
    return build_registry(std::move(definitions), j.value("version", std::string()));
}

ConceptRegistry load_registry(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, {}, std::string("registry is not valid JSON: ") + e.what());
    }
    return registry_from_json(j);
}

ConceptRegistry load_registry_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, path.string(), "cannot open registry " + path.string());
    return load_registry(in);
}

nlohmann::json to_json(const ConceptRegistry& registry) {
    nlohmann::json concepts = nlohmann::json::array();
    for (const auto& c : registry.concepts()) concepts.push_back(to_json(c));
    return {{"version", registry.version()}, {"concepts", std::move(concepts)}};
}

} // namespace ropa

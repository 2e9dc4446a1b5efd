#include "ropa/ingest/profile.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include "ropa/core/error.hpp"
#include "ropa/core/text.hpp"

namespace ropa {

const std::string* JurisdictionProfile::concept_for_header(std::string_view header) const {
    const auto key = text::normalize_key(header);
    for (const auto& m : column_map) {
        if (text::normalize_key(m.column_header) == key) return &m.concept_name;
    }
    return nullptr;
}

bool JurisdictionProfile::references(std::string_view concept_name) const {
    return std::any_of(column_map.begin(), column_map.end(),
                       [&](const ColumnMapping& m) { return m.concept_name == concept_name; });
}

bool JurisdictionProfile::requires_concept(std::string_view concept_name) const {
    return std::find(required_concepts.begin(), required_concepts.end(), concept_name) != required_concepts.end();
}

std::span<const std::string> JurisdictionProfile::vocabulary_for(std::string_view concept_name) const {
    auto it = controlled_vocabularies.find(std::string(concept_name));
    if (it == controlled_vocabularies.end()) return {};
    return it->second;
}

void check_profile(const JurisdictionProfile& p, const ConceptRegistry& registry) {
    const std::string code(to_string(p.code));
    auto resolve = [&](const std::string& name) {
        if (!registry.contains(name))
            throw Error(Errc::unresolved_concept, name, "profile " + code + " references unknown concept '" + name + "'");
    };
    auto inconsistent = [&](const std::string& subject, const std::string& why) {
        throw Error(Errc::profile_inconsistency, subject, "profile " + code + ": " + why);
    };

    std::set<std::string> headers;
    std::set<std::string> mapped;
    for (const auto& m : p.column_map) {
        resolve(m.concept_name);
        auto key = text::normalize_key(m.column_header);
        if (key.empty()) inconsistent(m.concept_name, "empty column header for '" + m.concept_name + "'");
        if (!headers.insert(key).second) inconsistent(m.column_header, "column header '" + m.column_header + "' appears twice");
        if (!mapped.insert(m.concept_name).second)
            inconsistent(m.concept_name, "concept '" + m.concept_name + "' is mapped by two columns");
    }
    for (const auto& name : p.required_concepts) {
        resolve(name);
        if (!mapped.count(name)) inconsistent(name, "required concept '" + name + "' has no column");
    }
    for (const auto& [name, values] : p.controlled_vocabularies) {
        resolve(name);
        if (!mapped.count(name)) inconsistent(name, "controlled vocabulary for unmapped concept '" + name + "'");
        if (values.empty()) inconsistent(name, "empty controlled vocabulary for '" + name + "'");
    }
    for (const auto& name : p.reconstructed_concepts) resolve(name);

    if (p.art30_transcription_only) {
        std::set<std::string> mandatory;
        for (const auto& c : registry.concepts()) {
            if (c.mandatory_art30) mandatory.insert(c.name);
        }
        if (mapped != mandatory)
            inconsistent(code, "a transcription-only template must map exactly the mandatory Article 30 concepts");
    }
}

namespace {

std::vector<std::string> strings(const nlohmann::json& j, const char* key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    if (!j.at(key).is_array()) throw Error(Errc::parse_error, key, std::string("'") + key + "' must be an array");
    for (const auto& v : j.at(key)) {
        if (!v.is_string()) throw Error(Errc::parse_error, key, std::string("'") + key + "' must hold strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

} // namespace

JurisdictionProfile profile_from_json(const nlohmann::json& j, const ConceptRegistry& registry) {
    if (!j.is_object()) throw Error(Errc::parse_error, {}, "profile must be a JSON object");
    JurisdictionProfile p;
    try {
        auto code = parse_jurisdiction(j.at("code").get<std::string>());
        if (!code) throw Error(Errc::parse_error, j.at("code").get<std::string>(), "unknown jurisdiction code");
        p.code = *code;
        p.display_name = j.value("display_name", std::string(to_string(p.code)));
        for (const auto& m : j.at("column_map")) {
            p.column_map.push_back({m.at("column_header").get<std::string>(), m.at("concept_name").get<std::string>()});
        }
        p.required_concepts = strings(j, "required_concepts");
        p.reconstructed_concepts = strings(j, "reconstructed_concepts");
        if (j.contains("controlled_vocabularies")) {
            for (const auto& [name, values] : j.at("controlled_vocabularies").items()) {
                p.controlled_vocabularies[name] = values.get<std::vector<std::string>>();
            }
        }
        p.art30_transcription_only = j.value("art30_transcription_only", false);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, {}, std::string("malformed profile: ") + e.what());
    }
    check_profile(p, registry);
    return p;
}

nlohmann::json to_json(const JurisdictionProfile& p) {
    nlohmann::json columns = nlohmann::json::array();
    for (const auto& m : p.column_map) columns.push_back({{"column_header", m.column_header}, {"concept_name", m.concept_name}});
    nlohmann::json j{{"code", to_string(p.code)},
                     {"display_name", p.display_name},
                     {"column_map", std::move(columns)},
                     {"required_concepts", p.required_concepts},
                     {"controlled_vocabularies", p.controlled_vocabularies},
                     {"art30_transcription_only", p.art30_transcription_only}};
    if (!p.reconstructed_concepts.empty()) j["reconstructed_concepts"] = p.reconstructed_concepts;
    return j;
}

JurisdictionProfile load_profile(std::istream& in, const ConceptRegistry& registry) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, {}, std::string("profile is not valid JSON: ") + e.what());
    }
    return profile_from_json(j, registry);
}

JurisdictionProfile load_profile_file(const std::filesystem::path& path, const ConceptRegistry& registry) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, path.string(), "cannot open profile " + path.string());
    return load_profile(in, registry);
}

std::vector<JurisdictionProfile> load_profiles_dir(const std::filesystem::path& dir, const ConceptRegistry& registry) {
    std::error_code ec;
    std::filesystem::directory_iterator it(dir, ec);
    if (ec) throw Error(Errc::io_error, dir.string(), "cannot read profile directory " + dir.string());

    std::vector<JurisdictionProfile> profiles;
    for (const auto& entry : it) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        profiles.push_back(load_profile_file(entry.path(), registry));
    }
    std::sort(profiles.begin(), profiles.end(), [](const auto& a, const auto& b) { return a.code < b.code; });
    for (std::size_t i = 1; i < profiles.size(); ++i) {
        if (profiles[i].code == profiles[i - 1].code)
            throw Error(Errc::profile_inconsistency, std::string(to_string(profiles[i].code)),
                        "two profiles for jurisdiction " + std::string(to_string(profiles[i].code)));
    }
    return profiles;
}

const JurisdictionProfile* find_profile(std::span<const JurisdictionProfile> profiles, Jurisdiction code) {
    for (const auto& p : profiles) {
        if (p.code == code) return &p;
    }
    return nullptr;
}

} // namespace ropa

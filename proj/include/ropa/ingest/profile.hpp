#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ropa/core/record.hpp"
#include "ropa/core/registry.hpp"

namespace ropa {

struct ColumnMapping {
    std::string column_header;
    std::string concept_name;

    bool operator==(const ColumnMapping&) const = default;
};

// Machine-readable description of one regulator's ROPA template.
struct JurisdictionProfile {
    Jurisdiction code = Jurisdiction::UK;
    std::string display_name;
    std::vector<ColumnMapping> column_map;
    std::vector<std::string> required_concepts;
    std::map<std::string, std::vector<std::string>> controlled_vocabularies;
    bool art30_transcription_only = false;
    // Concepts whose presence or requirement level in this template was
    // reconstructed rather than read off the regulator's published form.
    std::vector<std::string> reconstructed_concepts;

    // Concept mapped from `header` by the column map (normalized match).
    const std::string* concept_for_header(std::string_view header) const;
    bool references(std::string_view concept_name) const;
    bool requires_concept(std::string_view concept_name) const;
    std::span<const std::string> vocabulary_for(std::string_view concept_name) const;

    bool operator==(const JurisdictionProfile&) const = default;
};

// Checks the profile invariants against `registry`. Throws
// Error(unresolved_concept) naming the concept, or Error(profile_inconsistency).
void check_profile(const JurisdictionProfile& profile, const ConceptRegistry& registry);

JurisdictionProfile profile_from_json(const nlohmann::json& j, const ConceptRegistry& registry);
nlohmann::json to_json(const JurisdictionProfile& profile);

// Parses and checks a JSON profile document.
JurisdictionProfile load_profile(std::istream& in, const ConceptRegistry& registry);
JurisdictionProfile load_profile_file(const std::filesystem::path& path, const ConceptRegistry& registry);

// Loads every *.json file in `dir`, ordered by jurisdiction code.
std::vector<JurisdictionProfile> load_profiles_dir(const std::filesystem::path& dir, const ConceptRegistry& registry);

const JurisdictionProfile* find_profile(std::span<const JurisdictionProfile> profiles, Jurisdiction code);

} // namespace ropa

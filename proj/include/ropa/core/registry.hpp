#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ropa/core/concept.hpp"

namespace ropa {

// Immutable, validated set of concepts. Only build_registry() constructs one,
// so every instance satisfies the registry invariants.
class ConceptRegistry {
public:
    ConceptRegistry() = default;

    const std::string& version() const noexcept { return version_; }
    std::span<const ConceptDefinition> concepts() const noexcept { return concepts_; }
    std::size_t size() const noexcept { return concepts_.size(); }

    // Exact canonical-name lookup.
    const ConceptDefinition* find(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name) != nullptr; }

    bool operator==(const ConceptRegistry& other) const {
        return version_ == other.version_ && concepts_ == other.concepts_;
    }

private:
    friend ConceptRegistry build_registry(std::vector<ConceptDefinition>, std::string);
    friend const ConceptDefinition* lookup_concept(const ConceptRegistry&, std::string_view);

    std::string version_;
    std::vector<ConceptDefinition> concepts_;
    std::unordered_map<std::string, std::size_t> by_name_;
    std::unordered_map<std::string, std::size_t> by_key_;
};

// Throws Error with duplicate_name, synonym_collision or constraint_violation;
// the error subject is the offending concept.
ConceptRegistry build_registry(std::vector<ConceptDefinition> definitions, std::string version);

// Resolves a header against canonical names, display names and synonyms after
// normalization. Returns nullptr when nothing matches.
const ConceptDefinition* lookup_concept(const ConceptRegistry& registry, std::string_view header);

struct RegistryCensus {
    std::size_t total = 0;
    std::size_t mandatory = 0;
    std::size_t with_specified_values = 0;

    bool operator==(const RegistryCensus&) const = default;
};

RegistryCensus registry_census(const ConceptRegistry& registry);

ConceptRegistry registry_from_json(const nlohmann::json& j);
ConceptRegistry load_registry(std::istream& in);
ConceptRegistry load_registry_file(const std::filesystem::path& path);
nlohmann::json to_json(const ConceptRegistry& registry);

} // namespace ropa

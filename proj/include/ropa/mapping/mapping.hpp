#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "ropa/core/registry.hpp"
#include "ropa/mapping/dpv_catalog.hpp"

namespace ropa {

inline constexpr std::string_view kDefaultExtensionNamespace = "https://ropa.example.org/ns/ext#";

// How a concept corresponds to DPV:
//   exact   - an existing DPV term, no change needed
//   partial - a DPV term that needs extending
//   complex - a combination of several DPV terms
//   none    - no DPV term; a new one is minted in the extension namespace
enum class MatchCategory { exact, partial, complex, none };

std::string_view to_string(MatchCategory c) noexcept;
std::optional<MatchCategory> parse_match_category(std::string_view s) noexcept;

struct MappingEntry {
    std::string concept_name;
    std::string label;
    MatchCategory category = MatchCategory::exact;
    std::vector<std::string> target_iris;
    std::string extension_note;
    std::optional<std::size_t> specified_value_count;
    std::optional<std::size_t> dpv_property_count;

    bool operator==(const MappingEntry&) const = default;
};

// CamelCase local name derived from a label: non-alphanumeric characters split
// words, each word's first letter is upper-cased, the rest is kept as written.
// "Original Source of Data" -> "OriginalSourceOfData".
std::string camel_case_name(std::string_view label);

// Shipped correspondence table, one entry per concept. Construction checks the
// per-entry invariants; target lists of category-none entries may be left empty
// and are then filled with the label-derived extension IRI.
class MappingTable {
public:
    MappingTable() = default;
    // Throws Error(duplicate_name) or Error(constraint_violation).
    MappingTable(std::vector<MappingEntry> entries, std::string extension_namespace);

    const std::string& extension_namespace() const noexcept { return extension_namespace_; }
    std::span<const MappingEntry> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const MappingEntry* find(std::string_view concept_name) const;

private:
    std::vector<MappingEntry> entries_;
    std::string extension_namespace_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Table file: JSON array of entries. "dpv:" and "ext:" prefixes in target_iris
// expand against the catalog namespace and `extension_namespace`.
MappingTable mapping_table_from_json(const nlohmann::json& j, const DpvCatalog& catalog,
                                     std::string extension_namespace = std::string(kDefaultExtensionNamespace));
MappingTable load_mapping_table(std::istream& in, const DpvCatalog& catalog,
                                std::string extension_namespace = std::string(kDefaultExtensionNamespace));
MappingTable load_mapping_table_file(const std::filesystem::path& path, const DpvCatalog& catalog,
                                     std::string extension_namespace = std::string(kDefaultExtensionNamespace));
nlohmann::json to_json(const MappingEntry& entry);

// Returns the concept's entry after checking its IRIs against the catalog:
// DPV IRIs must exist there, extension IRIs must not.
// Throws Error(unmapped_concept) or Error(dangling_iri).
MappingEntry classify(const ConceptDefinition& def, const DpvCatalog& catalog, const MappingTable& table);

struct MappingCensus {
    std::size_t exact_count = 0;
    std::size_t partial_count = 0;
    std::size_t complex_count = 0;
    std::size_t none_count = 0;

    std::size_t total() const noexcept { return exact_count + partial_count + complex_count + none_count; }
    bool operator==(const MappingCensus&) const = default;
};

// Counts categories over the registry's concepts. Throws Error(coverage_gap)
// naming the first registry concept without an entry.
MappingCensus mapping_census(const MappingTable& table, const ConceptRegistry& registry);

// Runs classify() over every registry concept, reporting a missing entry as
// coverage_gap.
void verify_mapping(const MappingTable& table, const ConceptRegistry& registry, const DpvCatalog& catalog);

struct ExtensionTerm {
    std::string iri;
    std::string label;
    std::string definition;

    bool operator==(const ExtensionTerm&) const = default;
};

// One term per category-none entry, in table order. Throws
// Error(extension_collision) when two labels derive the same IRI.
std::vector<ExtensionTerm> extension_terms(const MappingTable& table);

struct ValueCoverage {
    std::size_t template_values = 0;
    std::size_t dpv_values = 0;

    bool operator==(const ValueCoverage&) const = default;
};

// The recorded (template values, DPV values) pair, undivided. Throws
// Error(counts_unavailable) when the concept has no specified values or the
// entry lacks either count.
ValueCoverage value_coverage(const ConceptDefinition& def, const MappingEntry& entry);

} // namespace ropa

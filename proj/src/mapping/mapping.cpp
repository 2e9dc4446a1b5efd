#include "ropa/mapping/mapping.hpp"

#include <fstream>
#include <istream>
#include <map>

#include "ropa/core/error.hpp"

namespace ropa {

std::string_view to_string(MatchCategory c) noexcept {
    switch (c) {
    case MatchCategory::exact: return "exact";
    case MatchCategory::partial: return "partial";
    case MatchCategory::complex: return "complex";
    case MatchCategory::none: return "none";
    }
    return "none";
}

std::optional<MatchCategory> parse_match_category(std::string_view s) noexcept {
    for (auto c : {MatchCategory::exact, MatchCategory::partial, MatchCategory::complex, MatchCategory::none}) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

std::string camel_case_name(std::string_view label) {
    std::string out;
    bool word_start = true;
    for (char c : label) {
        const bool alnum = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                           static_cast<unsigned char>(c) >= 0x80;
        if (!alnum) {
            word_start = true;
            continue;
        }
        if (word_start && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
        out.push_back(c);
        word_start = false;
    }
    return out;
}

MappingTable::MappingTable(std::vector<MappingEntry> entries, std::string extension_namespace)
    : entries_(std::move(entries)), extension_namespace_(std::move(extension_namespace)) {
    if (extension_namespace_.empty()) throw Error(Errc::constraint_violation, {}, "extension namespace is empty");

    for (std::size_t i = 0; i < entries_.size(); ++i) {
        auto& e = entries_[i];
        auto fail = [&](const std::string& why) {
            throw Error(Errc::constraint_violation, e.concept_name, "mapping for '" + e.concept_name + "': " + why);
        };
        if (!index_.emplace(e.concept_name, i).second)
            throw Error(Errc::duplicate_name, e.concept_name, "concept '" + e.concept_name + "' is mapped twice");

        switch (e.category) {
        case MatchCategory::exact:
            if (!e.extension_note.empty()) fail("an exact match carries no extension note");
            [[fallthrough]];
        case MatchCategory::partial:
            if (e.target_iris.size() != 1) fail("exact and partial matches name exactly one IRI");
            break;
        case MatchCategory::complex:
            if (e.target_iris.size() < 2) fail("a complex match combines at least two IRIs");
            break;
        case MatchCategory::none: {
            const auto local = camel_case_name(e.label);
            if (local.empty()) fail("a category-none entry needs a label to mint its IRI");
            const auto minted = extension_namespace_ + local;
            if (e.target_iris.empty()) e.target_iris.push_back(minted);
            if (e.target_iris.size() != 1) fail("a category-none entry names exactly one extension IRI");
            if (e.target_iris.front() != minted)
                fail("extension IRI " + e.target_iris.front() + " does not match the label-derived " + minted);
            break;
        }
        }
        for (const auto& iri : e.target_iris) {
            if (iri.empty()) fail("empty target IRI");
        }
    }
}

const MappingEntry* MappingTable::find(std::string_view concept_name) const {
    auto it = index_.find(std::string(concept_name));
    return it == index_.end() ? nullptr : &entries_[it->second];
}

namespace {

std::string expand(const std::string& iri, const DpvCatalog& catalog, const std::string& extension_namespace) {
    if (iri.starts_with("dpv:")) return catalog.namespace_iri() + iri.substr(4);
    if (iri.starts_with("ext:")) return extension_namespace + iri.substr(4);
    return iri;
}

std::optional<std::size_t> optional_count(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::size_t>();
}

} // namespace

MappingTable mapping_table_from_json(const nlohmann::json& j, const DpvCatalog& catalog,
                                     std::string extension_namespace) {
    if (!j.is_array()) throw Error(Errc::parse_error, {}, "mapping table must be a JSON array of entries");
    std::vector<MappingEntry> entries;
    try {
        for (const auto& item : j) {
            MappingEntry e;
            e.concept_name = item.at("concept_name").get<std::string>();
            e.label = item.value("label", std::string());
            auto category = parse_match_category(item.at("category").get<std::string>());
            if (!category) throw Error(Errc::parse_error, e.concept_name, "unknown category for '" + e.concept_name + "'");
            e.category = *category;
            if (item.contains("target_iris")) {
                for (const auto& iri : item.at("target_iris"))
                    e.target_iris.push_back(expand(iri.get<std::string>(), catalog, extension_namespace));
            }
            e.extension_note = item.value("extension_note", std::string());
            e.specified_value_count = optional_count(item, "specified_value_count");
            e.dpv_property_count = optional_count(item, "dpv_property_count");
            entries.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, {}, std::string("malformed mapping table: ") + e.what());
    }
    return MappingTable(std::move(entries), std::move(extension_namespace));
}

MappingTable load_mapping_table(std::istream& in, const DpvCatalog& catalog, std::string extension_namespace) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, {}, std::string("mapping table is not valid JSON: ") + e.what());
    }
    return mapping_table_from_json(j, catalog, std::move(extension_namespace));
}

MappingTable load_mapping_table_file(const std::filesystem::path& path, const DpvCatalog& catalog,
                                     std::string extension_namespace) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io_error, path.string(), "cannot open mapping table " + path.string());
    return load_mapping_table(in, catalog, std::move(extension_namespace));
}

nlohmann::json to_json(const MappingEntry& e) {
    nlohmann::json j{{"concept_name", e.concept_name},
                     {"label", e.label},
                     {"category", to_string(e.category)},
                     {"target_iris", e.target_iris},
                     {"extension_note", e.extension_note}};
    if (e.specified_value_count) j["specified_value_count"] = *e.specified_value_count;
    if (e.dpv_property_count) j["dpv_property_count"] = *e.dpv_property_count;
    return j;
}

MappingEntry classify(const ConceptDefinition& def, const DpvCatalog& catalog, const MappingTable& table) {
    const auto* entry = table.find(def.name);
    if (!entry) throw Error(Errc::unmapped_concept, def.name, "no mapping entry for '" + def.name + "'");

    for (const auto& iri : entry->target_iris) {
        if (entry->category == MatchCategory::none) {
            if (catalog.in_namespace(iri) || catalog.contains(iri))
                throw Error(Errc::dangling_iri, iri,
                            "extension IRI " + iri + " of '" + def.name + "' collides with the DPV namespace");
        } else if (!catalog.contains(iri)) {
            throw Error(Errc::dangling_iri, iri,
                        "IRI " + iri + " cited for '" + def.name + "' is not in the DPV catalog");
        }
    }
    return *entry;
}

MappingCensus mapping_census(const MappingTable& table, const ConceptRegistry& registry) {
    MappingCensus census;
    for (const auto& def : registry.concepts()) {
        const auto* entry = table.find(def.name);
        if (!entry) throw Error(Errc::coverage_gap, def.name, "no mapping entry for '" + def.name + "'");
        switch (entry->category) {
        case MatchCategory::exact: ++census.exact_count; break;
        case MatchCategory::partial: ++census.partial_count; break;
        case MatchCategory::complex: ++census.complex_count; break;
        case MatchCategory::none: ++census.none_count; break;
        }
    }
    return census;
}

void verify_mapping(const MappingTable& table, const ConceptRegistry& registry, const DpvCatalog& catalog) {
    for (const auto& def : registry.concepts()) {
        if (!table.find(def.name))
            throw Error(Errc::coverage_gap, def.name, "no mapping entry for '" + def.name + "'");
        classify(def, catalog, table);
    }
}

std::vector<ExtensionTerm> extension_terms(const MappingTable& table) {
    std::vector<ExtensionTerm> terms;
    std::map<std::string, std::string> minted_by;
    for (const auto& e : table.entries()) {
        if (e.category != MatchCategory::none) continue;
        const auto iri = table.extension_namespace() + camel_case_name(e.label);
        auto [it, inserted] = minted_by.emplace(iri, e.concept_name);
        if (!inserted)
            throw Error(Errc::extension_collision, iri,
                        "labels of '" + it->second + "' and '" + e.concept_name + "' both derive " + iri);
        terms.push_back({iri, e.label, e.extension_note});
    }
    return terms;
}

ValueCoverage value_coverage(const ConceptDefinition& def, const MappingEntry& entry) {
    if (!def.has_specified_values() || !entry.specified_value_count || !entry.dpv_property_count)
        throw Error(Errc::counts_unavailable, def.name, "no value coverage recorded for '" + def.name + "'");
    return {*entry.specified_value_count, *entry.dpv_property_count};
}

} // namespace ropa

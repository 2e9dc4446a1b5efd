#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ropa/core/record.hpp"
#include "ropa/core/registry.hpp"
#include "ropa/mapping/dpv_catalog.hpp"
#include "ropa/mapping/mapping.hpp"
#include "ropa/rdf/graph.hpp"

namespace ropa::rdf {

inline constexpr std::string_view kDefaultBaseIri = "https://ropa.example.org/activity/";

struct EmissionOptions {
    // Activity subjects are minted as base_iri + percent-encoded record id.
    std::string base_iri = std::string(kDefaultBaseIri);
    std::string dpv_namespace = std::string(kDpvNamespace);
};

// Property linking an activity to a party of the given role. Roles without a
// DPV property use the table's extension namespace.
std::string party_predicate(PartyRole role, const MappingTable& table, const EmissionOptions& options = {});

// Unreserved characters pass through; everything else becomes %XX.
std::string percent_encode(std::string_view s);
// Throws Error(constraint_violation) on a malformed escape.
std::string percent_decode(std::string_view s);

// Shape per record:
//   <base+id> a dpv:PersonalDataHandling ; ext:hasJurisdiction "UK" .
//   <base+id> <entry IRI> "value" .                    exact, partial, none
//   <base+id> <iri 1> [ <iri 2> "value" ] .             complex
//   <base+id> <role property> [ vcard:fn "name" ; ... ] parties
// Throws Error(unresolved_value) for a value key outside the registry,
// Error(coverage_gap) for a registry concept without a mapping entry,
// Error(ambiguous_mapping) when two entries (or an entry and a role property)
// share a subject-level predicate, and Error(constraint_violation) for empty
// or duplicate record ids.
Graph to_graph(std::span<const RopaRecord> records, const ConceptRegistry& registry, const MappingTable& table,
               const EmissionOptions& options = {});

// Inverse of to_graph. Records come back sorted by id with values and parties
// in sorted order. Throws Error(unrecognized_predicate) naming the first
// predicate that is neither mapped nor part of the contact vocabulary, and
// Error(constraint_violation) when the graph does not have to_graph's shape.
std::vector<RopaRecord> from_graph(const Graph& graph, const ConceptRegistry& registry, const MappingTable& table,
                                   const EmissionOptions& options = {});

} // namespace ropa::rdf

#pragma once

#include <span>
#include <string>
#include <vector>

#include "ropa/core/record.hpp"
#include "ropa/core/registry.hpp"
#include "ropa/ingest/profile.hpp"
#include "ropa/validation/validation.hpp"

namespace ropa::testing {

// A finding reduced to what the rules decide; detail text is not compared.
struct Finding {
    std::string record_id;
    std::string concept_name;
    std::string code;
    std::string severity;

    auto operator<=>(const Finding&) const = default;
};

// Brute-force requirement enumerator: walks every (record, concept,
// requirement) pair on its own and writes down each one that fails. Shares
// no code with the validator. Findings come back sorted.
std::vector<Finding> enumerate_findings(std::span<const RopaRecord> records, const JurisdictionProfile& profile,
                                        const ConceptRegistry& registry);

// The validator's report in the oracle's terms, sorted.
std::vector<Finding> findings_of(const ValidationReport& report);

// One relevant configuration of a concept for the validation rules.
struct Shape {
    bool mandatory = false;
    bool single = false;
    bool specified = false; // specified values "Spec one", "Spec two"
    bool required = false;  // required by the template
    bool vocabulary = false; // template list holding "Listed"
};

// All 32 shapes.
std::vector<Shape> all_shapes();

ConceptDefinition make_concept(const std::string& name, const Shape& shape);

// Adds `name` to the profile's column map, required list and vocabularies as
// the shape asks.
void apply_shape(JurisdictionProfile& profile, const std::string& name, const Shape& shape);

// Distinct cell contents as far as the rules can tell: absent, blank, a
// specified value, a listed value, an unlisted value, and two-value mixes.
extern const std::vector<std::vector<std::string>> kCellStates;

} // namespace ropa::testing

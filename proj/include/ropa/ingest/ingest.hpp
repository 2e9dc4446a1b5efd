#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ropa/core/record.hpp"
#include "ropa/core/registry.hpp"
#include "ropa/ingest/profile.hpp"

namespace ropa {

struct UnknownHeader {
    std::size_t column = 0; // 1-based
    std::string header;

    bool operator==(const UnknownHeader&) const = default;
};

struct CoercionNote {
    std::string record_id;
    std::string concept_name;
    std::string note;

    bool operator==(const CoercionNote&) const = default;
};

// Advisory findings of one ingestion run. Never alters record content.
struct IngestDiagnostics {
    std::vector<UnknownHeader> unknown_headers;
    std::size_t empty_rows_skipped = 0;
    std::vector<CoercionNote> coercion_notes;

    bool empty() const noexcept {
        return unknown_headers.empty() && empty_rows_skipped == 0 && coercion_notes.empty();
    }
};

struct IngestResult {
    std::vector<RopaRecord> records;
    IngestDiagnostics diagnostics;
};

// Party role carried by a party-valued concept, if any.
std::optional<PartyRole> party_role_for(std::string_view concept_name) noexcept;

// Splits a free-text contact cell into address, email and phone parts.
ContactDetails parse_contact_details(std::string_view cell);

// One record per non-empty data row. Headers resolve through the profile's
// column map first, then registry synonyms; unresolved columns are reported
// and dropped. Cells of multi-valued concepts are split on ';'. Record ids are
// "<code>-<data row number, 4 digits>".
//
// Throws SyntaxError(parse_error) for malformed CSV and
// Error(header_row_missing) for input without any row.
IngestResult parse_ropa_csv(std::string_view csv_text, const JurisdictionProfile& profile,
                            const ConceptRegistry& registry);

// Header row in column-map order, then one row per record; multi values are
// joined with "; ". Concepts outside the profile are omitted.
std::string export_template_csv(std::span<const RopaRecord> records, const JurisdictionProfile& profile);

} // namespace ropa

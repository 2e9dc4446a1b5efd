#include "ropa/ingest/ingest.hpp"

#include <algorithm>
#include <cstdio>

#include "ropa/core/error.hpp"
#include "ropa/core/text.hpp"
#include "ropa/ingest/csv.hpp"

namespace ropa {

std::optional<PartyRole> party_role_for(std::string_view concept_name) noexcept {
    if (concept_name == "controller_name") return PartyRole::controller;
    if (concept_name == "joint_controllers") return PartyRole::joint_controller;
    if (concept_name == "representative") return PartyRole::representative;
    if (concept_name == "data_protection_officer") return PartyRole::dpo;
    if (concept_name == "processors") return PartyRole::processor;
    if (concept_name == "third_parties") return PartyRole::recipient;
    return std::nullopt;
}

namespace {

bool looks_like_phone(std::string_view s) {
    std::size_t digits = 0;
    for (char c : s) {
        if (c >= '0' && c <= '9') {
            ++digits;
        } else if (c != '+' && c != ' ' && c != '-' && c != '(' && c != ')' && c != '.') {
            return false;
        }
    }
    return digits >= 6;
}

void append(std::optional<std::string>& slot, std::string_view item) {
    if (slot) {
        *slot += "; ";
        *slot += item;
    } else {
        slot = std::string(item);
    }
}

std::string record_id_for(Jurisdiction code, std::size_t row_number) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%s-%04zu", std::string(to_string(code)).c_str(), row_number);
    return buffer;
}

} // namespace

ContactDetails parse_contact_details(std::string_view cell) {
    ContactDetails contact;
    for (const auto& item : text::split_list(cell)) {
        if (item.find('@') != std::string::npos) {
            append(contact.email, item);
        } else if (looks_like_phone(item)) {
            append(contact.phone, item);
        } else {
            append(contact.address, item);
        }
    }
    return contact;
}

IngestResult parse_ropa_csv(std::string_view csv_text, const JurisdictionProfile& profile,
                            const ConceptRegistry& registry) {
    auto rows = csv::read(csv_text);
    std::size_t first = 0;
    while (first < rows.size() &&
           std::all_of(rows[first].begin(), rows[first].end(), [](const auto& c) { return text::is_blank(c); }))
        ++first;
    if (first == rows.size()) throw Error(Errc::header_row_missing, {}, "CSV input has no header row");

    IngestResult result;
    auto& diag = result.diagnostics;

    const auto& header = rows[first];
    std::vector<const ConceptDefinition*> columns(header.size(), nullptr);
    for (std::size_t i = 0; i < header.size(); ++i) {
        const ConceptDefinition* def = nullptr;
        if (const auto* name = profile.concept_for_header(header[i])) {
            def = registry.find(*name);
        }
        if (!def) def = lookup_concept(registry, header[i]);
        if (def) {
            columns[i] = def;
        } else {
            diag.unknown_headers.push_back({i + 1, header[i]});
        }
    }

    for (std::size_t r = first + 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const std::size_t row_number = r - first;
        if (std::all_of(row.begin(), row.end(), [](const auto& c) { return text::is_blank(c); })) {
            ++diag.empty_rows_skipped;
            continue;
        }

        RopaRecord record;
        record.record_id = record_id_for(profile.code, row_number);
        record.jurisdiction = profile.code;

        std::size_t dropped = 0;
        for (std::size_t i = header.size(); i < row.size(); ++i) {
            if (!text::is_blank(row[i])) ++dropped;
        }
        if (dropped) {
            diag.coercion_notes.push_back(
                {record.record_id, {}, std::to_string(dropped) + " cell(s) beyond the header row dropped"});
        }

        for (std::size_t i = 0; i < header.size() && i < row.size(); ++i) {
            const auto* def = columns[i];
            if (!def || text::is_blank(row[i])) continue;

            std::vector<std::string> items;
            if (def->cardinality == Cardinality::multi) {
                items = text::split_list(row[i]);
            } else {
                items.emplace_back(text::trim(row[i]));
            }

            for (auto& item : items) {
                if (def->cardinality == Cardinality::single && record.has_value(def->name)) {
                    diag.coercion_notes.push_back({record.record_id, def->name,
                                                   "single-valued concept already set; '" + item + "' dropped"});
                    continue;
                }
                if (!record.add_value(def->name, item)) {
                    diag.coercion_notes.push_back(
                        {record.record_id, def->name, "duplicate value '" + item + "' dropped"});
                }
            }
        }

        for (const auto& [name, list] : record.values) {
            auto role = party_role_for(name);
            if (!role) continue;
            for (const auto& v : list) record.parties.push_back({*role, v, {}});
        }
        if (auto contact = record.values.find("controller_contact_details"); contact != record.values.end()) {
            for (auto& party : record.parties) {
                if (party.role != PartyRole::controller) continue;
                for (const auto& v : contact->second) {
                    auto parsed = parse_contact_details(v);
                    if (parsed.address) append(party.contact.address, *parsed.address);
                    if (parsed.email) append(party.contact.email, *parsed.email);
                    if (parsed.phone) append(party.contact.phone, *parsed.phone);
                }
            }
        }

        result.records.push_back(std::move(record));
    }
    return result;
}

std::string export_template_csv(std::span<const RopaRecord> records, const JurisdictionProfile& profile) {
    std::vector<std::string> cells;
    cells.reserve(profile.column_map.size());
    for (const auto& m : profile.column_map) cells.push_back(m.column_header);
    std::string out = csv::write_row(cells);

    for (const auto& record : records) {
        cells.clear();
        for (const auto& m : profile.column_map) {
            auto values = record.values_of(m.concept_name);
            cells.push_back(text::join(std::vector<std::string>(values.begin(), values.end()), "; "));
        }
        out += csv::write_row(cells);
    }
    return out;
}

} // namespace ropa
